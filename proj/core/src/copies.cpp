#include "blowup/copies.hpp"

#include "blowup/error.hpp"
#include "blowup/rng.hpp"

namespace blowup {

namespace {

struct ExactCounter {
    const Graph& host;
    const Graph& pattern;
    std::vector<Bitset> pools;
    std::vector<Vertex> image;
    Bitset used;

    double count(int i)
    {
        const int s = pattern.order();
        Bitset cand = pools[i];
        cand.subtract(used);
        for (int j = 0; j < i; ++j)
            if (pattern.has_edge(i, j)) cand &= host.neighbours(image[j]);
        if (i == s - 1) return static_cast<double>(cand.count());
        double total = 0;
        cand.for_each([&](Vertex v) {
            image[i] = v;
            used.set(v);
            total += count(i + 1);
            used.reset(v);
        });
        return total;
    }
};

}  // namespace

double count_copies(const CopyCounter& cc, const Graph& host)
{
    const int s = cc.pattern.order();
    const int n = host.order();
    if (s == 0) return 1.0;
    std::vector<Bitset> pools;
    if (cc.frame) {
        if (static_cast<int>(cc.frame->size()) != s) throw Error("frame size differs from pattern order");
        for (const auto& part : *cc.frame) pools.push_back(Bitset::from_list(static_cast<std::size_t>(n), part));
    } else {
        pools.assign(static_cast<std::size_t>(s), host.full_set());
    }
    double space = 1.0;
    for (const auto& p : pools) space *= static_cast<double>(p.count());

    if (cc.mode == CountMode::Exact) {
        if (s > 8 || space > kExactCountBudget) throw Error("use SAMPLED");
        ExactCounter ec{host, cc.pattern, pools, std::vector<Vertex>(static_cast<std::size_t>(s)), host.empty_set()};
        return ec.count(0);
    }

    if (cc.trials == 0) throw Error("trials must be positive");
    if (space == 0.0) return 0.0;
    std::vector<VertexList> lists;
    for (const auto& p : pools) lists.push_back(p.to_list());
    Rng rng(cc.seed);
    std::uint64_t hits = 0;
    std::vector<Vertex> image(static_cast<std::size_t>(s));
    for (std::uint64_t t = 0; t < cc.trials; ++t) {
        bool ok = true;
        for (int i = 0; i < s && ok; ++i) {
            image[i] = lists[i][rng.below(lists[i].size())];
            for (int j = 0; j < i && ok; ++j) {
                if (image[j] == image[i]) ok = false;
                else if (cc.pattern.has_edge(i, j) && !host.has_edge(image[i], image[j])) ok = false;
            }
        }
        if (ok) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(cc.trials) * space;
}

}  // namespace blowup
