#include "blowup/biclique.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

namespace {

struct BicliqueSearch {
    const Graph& g;
    std::vector<Vertex> branch;  // vertices we choose from, in pivot order
    int p;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    VertexList chosen;
    std::optional<Bitset> answer_other;

    bool run(std::size_t from, const Bitset& common)
    {
        if (static_cast<int>(chosen.size()) == p) {
            answer_other = common;
            return true;
        }
        const int missing = p - static_cast<int>(chosen.size());
        // Vertices after `from` that can still extend the biclique.
        std::vector<std::size_t> viable;
        for (std::size_t i = from; i < branch.size(); ++i)
            if (g.degree_into(branch[i], common) >= p) viable.push_back(i);
        if (static_cast<int>(viable.size()) < missing) return false;

        for (std::size_t k = 0; k + static_cast<std::size_t>(missing) <= viable.size(); ++k) {
            if (nodes >= budget) {
                exhausted = true;
                return false;
            }
            ++nodes;
            const Vertex v = branch[viable[k]];
            Bitset next = common & g.neighbours(v);
            chosen.push_back(v);
            if (run(viable[k] + 1, next)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

std::vector<Vertex> pivot_order(const Graph& g, const VertexList& side, const Bitset& other)
{
    std::vector<Vertex> order = side;
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : order) deg[v] = g.degree_into(v, other);
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        if (deg[x] != deg[y]) return deg[x] > deg[y];
        return x < y;
    });
    return order;
}

}  // namespace

std::optional<Biclique> find_biclique(const BicliqueRequest& req, SearchStats* stats)
{
    if (req.host == nullptr) throw Error("biclique request without host");
    const Graph& g = *req.host;
    if (req.p < 1) throw Error("biclique size must be positive");
    const Bitset a = Bitset::from_list(static_cast<std::size_t>(g.order()), req.side_a);
    const Bitset b = Bitset::from_list(static_cast<std::size_t>(g.order()), req.side_b);
    if (!req.allow_overlap && a.intersects(b)) throw Error("sets not disjoint");

    if (static_cast<int>(a.count()) < req.p || static_cast<int>(b.count()) < req.p) {
        if (stats) *stats = {};
        return std::nullopt;
    }

    // Branch on the side with the larger average cross degree.
    std::size_t cross_a = 0, cross_b = 0;
    for (Vertex v : req.side_a) cross_a += static_cast<std::size_t>(g.degree_into(v, b));
    for (Vertex v : req.side_b) cross_b += static_cast<std::size_t>(g.degree_into(v, a));
    const bool branch_on_a = cross_a * b.count() >= cross_b * a.count();
    const Bitset& other = branch_on_a ? b : a;
    const VertexList& branch_side = branch_on_a ? req.side_a : req.side_b;

    BicliqueSearch search{g, pivot_order(g, branch_side, other), req.p, req.budget, 0, false, {}, std::nullopt};
    const bool found = search.run(0, other);
    if (stats) *stats = {search.nodes, search.exhausted};
    if (!found) return std::nullopt;

    VertexList chosen = search.chosen;
    VertexList rest = search.answer_other->to_list();
    rest.resize(static_cast<std::size_t>(req.p));
    std::sort(chosen.begin(), chosen.end());
    if (branch_on_a) return Biclique{chosen, rest};
    return Biclique{rest, chosen};
}

}  // namespace blowup
