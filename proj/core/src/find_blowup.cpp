#include "blowup/find_blowup.hpp"

#include <algorithm>

#include "blowup/error.hpp"
#include "blowup/rng.hpp"

namespace blowup {

namespace {

/// Pattern vertices by descending degree (ties by id), rearranged so that the
/// last two form an edge whenever the pattern has one.
std::vector<int> processing_order(const Graph& pattern)
{
    const int s = pattern.order();
    std::vector<int> order(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    if (s < 2) return order;
    for (int j = s - 1; j >= 1; --j) {
        for (int i = j - 1; i >= 0; --i) {
            if (!pattern.has_edge(order[i], order[j])) continue;
            const int a = order[i], b = order[j];
            order.erase(order.begin() + j);
            order.erase(order.begin() + i);
            order.push_back(a);
            order.push_back(b);
            return order;
        }
    }
    return order;
}

struct Search {
    const Graph& host;
    const Graph& pattern;
    const std::vector<int>& sizes;
    const BlowupSearchOptions& opts;
    std::vector<int> order;
    std::vector<Bitset> initial_pools;

    std::vector<VertexList> clusters;

    bool pools_ok(const std::vector<Bitset>& pools, const std::vector<bool>& assigned, const Bitset& used) const
    {
        for (int u = 0; u < pattern.order(); ++u) {
            if (assigned[u]) continue;
            Bitset p = pools[u];
            p.subtract(used);
            if (static_cast<int>(p.count()) < sizes[u]) return false;
        }
        return true;
    }

    /// Solves the last two pattern vertices of `order` given current pools.
    bool finish_pair(std::vector<Bitset>& pools, Bitset& used, std::uint64_t budget, SearchStats* stats)
    {
        const int s = pattern.order();
        const int a = order[s - 2], b = order[s - 1];
        Bitset pa = pools[a], pb = pools[b];
        pa.subtract(used);
        pb.subtract(used);
        if (pattern.has_edge(a, b)) {
            const int p = std::max(sizes[a], sizes[b]);
            BicliqueRequest req{&host, pa.to_list(), pb.to_list(), p, budget, true};
            auto bc = find_biclique(req, stats);
            if (!bc) return false;
            bc->a.resize(static_cast<std::size_t>(sizes[a]));
            bc->b.resize(static_cast<std::size_t>(sizes[b]));
            clusters[a] = bc->a;
            clusters[b] = bc->b;
            return true;
        }
        VertexList la = pa.to_list();
        if (static_cast<int>(la.size()) < sizes[a]) return false;
        la.resize(static_cast<std::size_t>(sizes[a]));
        for (Vertex v : la) pb.reset(v);
        VertexList lb = pb.to_list();
        if (static_cast<int>(lb.size()) < sizes[b]) return false;
        lb.resize(static_cast<std::size_t>(sizes[b]));
        clusters[a] = la;
        clusters[b] = lb;
        return true;
    }

    void restrict_neighbours(std::vector<Bitset>& pools, const std::vector<bool>& assigned, int v, Vertex x) const
    {
        for (int u = 0; u < pattern.order(); ++u)
            if (!assigned[u] && pattern.has_edge(u, v)) pools[u] &= host.neighbours(x);
    }

    bool greedy(int restart)
    {
        const int s = pattern.order();
        Rng rng(mix_seed(opts.seed, static_cast<std::uint64_t>(restart)));
        std::vector<Bitset> pools = initial_pools;
        std::vector<bool> assigned(static_cast<std::size_t>(s), false);
        Bitset used = host.empty_set();
        clusters.assign(static_cast<std::size_t>(s), {});

        const int greedy_count = s >= 2 ? s - 2 : s;
        for (int k = 0; k < greedy_count; ++k) {
            const int v = order[k];
            assigned[v] = true;
            for (int step = 0; step < sizes[v]; ++step) {
                Bitset cand = pools[v];
                cand.subtract(used);
                Vertex best = -1;
                double best_score = -1.0;
                cand.for_each([&](Vertex x) {
                    double score = 0.0;
                    double worst = 1e18;
                    for (int u = 0; u < s; ++u) {
                        if (assigned[u] || !pattern.has_edge(u, v)) continue;
                        Bitset p = pools[u] & host.neighbours(x);
                        p.subtract(used);
                        const double c = static_cast<double>(p.count());
                        score += c;
                        worst = std::min(worst, c - sizes[u]);
                    }
                    // Prefer candidates that keep every neighbouring pool
                    // viable, then the largest total pool.
                    double key = (worst < 0 ? -1e6 : 0.0) + score;
                    if (restart > 0) key *= 1.0 + 0.15 * rng.uniform();
                    if (key > best_score) {
                        best_score = key;
                        best = x;
                    }
                });
                if (best < 0) return false;
                clusters[v].push_back(best);
                used.set(best);
                restrict_neighbours(pools, assigned, v, best);
            }
            if (!pools_ok(pools, assigned, used)) return false;
        }
        if (s >= 2) return finish_pair(pools, used, opts.biclique_budget, nullptr);
        return true;
    }

    // Exhaustive fallback: enumerate clusters in `order`, finishing with the
    // biclique search on the final pair.
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool exhaustive(int k, std::vector<Bitset>& pools, std::vector<bool>& assigned, Bitset& used)
    {
        const int s = pattern.order();
        if (s >= 2 && k == s - 2) {
            SearchStats st;
            const std::uint64_t left = opts.exhaustive_budget > nodes ? opts.exhaustive_budget - nodes : 0;
            bool ok = finish_pair(pools, used, left, &st);
            nodes += st.nodes;
            if (st.budget_exhausted) exhausted = true;
            return ok;
        }
        if (k == s) return true;
        const int v = order[k];
        Bitset cand = pools[v];
        cand.subtract(used);
        VertexList list = cand.to_list();
        const int need = sizes[v];
        if (static_cast<int>(list.size()) < need) return false;
        std::vector<int> idx(static_cast<std::size_t>(need));
        for (int i = 0; i < need; ++i) idx[i] = i;
        const int m = static_cast<int>(list.size());
        assigned[v] = true;
        while (true) {
            if (++nodes > opts.exhaustive_budget) {
                exhausted = true;
                break;
            }
            std::vector<Bitset> next = pools;
            Bitset next_used = used;
            VertexList chosen;
            for (int i : idx) {
                chosen.push_back(list[i]);
                next_used.set(list[i]);
                restrict_neighbours(next, assigned, v, list[i]);
            }
            if (pools_ok(next, assigned, next_used)) {
                clusters[v] = chosen;
                if (exhaustive(k + 1, next, assigned, next_used)) return true;
                if (exhausted) break;
            }
            int i = need - 1;
            while (i >= 0 && idx[i] == m - need + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
        }
        assigned[v] = false;
        return false;
    }
};

}  // namespace

std::optional<Blowup> find_blowup_sized(const Graph& host, const Graph& pattern, const std::vector<int>& sizes,
                                        const BlowupSearchOptions& options)
{
    const int s = pattern.order();
    if (static_cast<int>(sizes.size()) != s) throw Error("one cluster size per pattern vertex required");
    for (int t : sizes)
        if (t < 1) throw Error("cluster size must be positive");
    if (options.frame && static_cast<int>(options.frame->size()) != s)
        throw Error("frame must have one part per pattern vertex");
    if (s == 0) return Blowup{pattern, {}};

    const auto n = static_cast<std::size_t>(host.order());
    Bitset allowed = options.allowed ? *options.allowed : host.full_set();
    std::vector<Bitset> pools;
    for (int i = 0; i < s; ++i) {
        Bitset p = options.frame ? Bitset::from_list(n, (*options.frame)[i]) : host.full_set();
        p &= allowed;
        pools.push_back(std::move(p));
    }

    Search search{host, pattern, sizes, options, processing_order(pattern), pools, {}};
    bool found = false;
    for (int r = 0; r < std::max(1, options.restarts) && !found; ++r) found = search.greedy(r);
    if (!found && options.exhaustive_budget > 0) {
        std::vector<Bitset> work = pools;
        std::vector<bool> assigned(static_cast<std::size_t>(s), false);
        Bitset used = host.empty_set();
        search.clusters.assign(static_cast<std::size_t>(s), {});
        found = search.exhaustive(0, work, assigned, used);
    }
    if (!found) return std::nullopt;

    Blowup out{pattern, {}};
    for (auto& c : search.clusters) std::sort(c.begin(), c.end());
    out.family.clusters = search.clusters;
    bool uniform = std::all_of(sizes.begin(), sizes.end(), [&](int t) { return t == sizes[0]; });
    out.family.balance = uniform ? Balance::exact(sizes[0]) : Balance{};
    if (!verify_blowup_hosted(host, out).passed()) throw Error("internal: find_blowup produced an invalid blow-up");
    return out;
}

std::optional<Blowup> find_blowup(const Graph& host, const Graph& pattern, int t, const BlowupSearchOptions& options)
{
    return find_blowup_sized(host, pattern, std::vector<int>(static_cast<std::size_t>(pattern.order()), t), options);
}

}  // namespace blowup
