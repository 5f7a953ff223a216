#include "blowup/rooted.hpp"

#include <algorithm>
#include <map>

#include "blowup/error.hpp"
#include "blowup/inheritance.hpp"
#include "blowup/rng.hpp"

namespace blowup {

namespace {

/// Labelled graph on positions 0..s-1 packed as an upper-triangle bitmask.
std::uint64_t labelled_mask(const Graph& g, const VertexList& positions)
{
    std::uint64_t mask = 0;
    int bit = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j, ++bit)
            if (g.has_edge(positions[i], positions[j])) mask |= std::uint64_t{1} << bit;
    return mask;
}

Graph graph_from_mask(int s, std::uint64_t mask)
{
    Graph r(s);
    int bit = 0;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j, ++bit)
            if (mask >> bit & 1U) r.add_edge(i, j);
    return r;
}

struct Choice {
    Graph reduced;
    int support = 0;
};

/// Samples partite s-sets (position 0 in the root set, position i in part i)
/// that inherit the degree condition in `g_cut`, and returns the most
/// frequent labelled induced graph.
std::optional<Choice> most_frequent_pattern(const Graph& g_cut, const VertexList& roots,
                                            const std::vector<VertexList>& parts, int s, double eps, int samples,
                                            Rng& rng)
{
    for (const auto& p : parts)
        if (p.empty()) return std::nullopt;
    PropertySpec spec(g_cut, s, eps, InheritanceMode::Absolute);
    std::map<std::uint64_t, int> counts;
    VertexList positions(static_cast<std::size_t>(s));
    for (int k = 0; k < samples; ++k) {
        positions[0] = roots[rng.below(roots.size())];
        for (int i = 1; i < s; ++i) positions[i] = parts[i - 1][rng.below(parts[i - 1].size())];
        if (inherits_degree(spec, positions)) ++counts[labelled_mask(g_cut, positions)];
    }
    if (counts.empty()) return std::nullopt;
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it)
        if (it->second > best->second) best = it;
    return Choice{graph_from_mask(s, best->first), best->second};
}

Graph drop_vertex_zero(const Graph& r)
{
    Graph out(r.order() - 1);
    for (auto [a, b] : r.edges())
        if (a > 0 && b > 0) out.add_edge(a - 1, b - 1);
    return out;
}

}  // namespace

std::optional<RootedBlowup> rooted_blowup(const Graph& g, const VertexList& root_set, int s, double eps, int t,
                                          const RootedOptions& options)
{
    if (s < 3) throw Error("rooted blow-up needs s >= 3");
    if (t < 1) throw Error("cluster size must be positive");
    const bool single = root_set.size() == 1;
    if (!single && static_cast<int>(root_set.size()) < t) throw Error("root set smaller than cluster size");

    const auto n = static_cast<std::size_t>(g.order());
    const Bitset roots = Bitset::from_list(n, root_set);
    Bitset outside = options.allowed ? *options.allowed : g.full_set();
    outside.subtract(roots);
    const Graph g_cut = g.without_edges_inside(roots);
    const VertexList outside_list = outside.to_list();
    if (static_cast<int>(outside_list.size()) < (s - 1) * t) return std::nullopt;

    std::optional<Graph> last_reduced;
    int last_support = 0;
    for (int r = 0; r < std::max(1, options.restarts); ++r) {
        Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(r)));
        std::vector<VertexList> parts(static_cast<std::size_t>(s - 1));
        for (Vertex x : outside_list) parts[rng.below(static_cast<std::uint64_t>(s - 1))].push_back(x);
        auto choice = most_frequent_pattern(g_cut, root_set, parts, s, eps, options.samples, rng);
        if (!choice) continue;
        last_reduced = choice->reduced;
        last_support = choice->support;
        const Graph& reduced = choice->reduced;
        const Graph rest = drop_vertex_zero(reduced);

        // Positions adjacent to the root in R only admit vertices that can
        // see enough of the root set.
        const int root_need = single ? 1 : t;
        Bitset attach = outside;
        outside.for_each([&](Vertex x) {
            if (g.degree_into(x, roots) < root_need) attach.reset(x);
        });
        if (single) attach &= g.neighbours(root_set[0]);
        std::vector<VertexList> frame;
        for (int j = 1; j < s; ++j) frame.push_back((reduced.has_edge(0, j) ? attach : outside).to_list());

        for (int copies = single ? t : options.copies_factor * t; copies >= t; --copies) {
            BlowupSearchOptions bo;
            bo.frame = frame;
            bo.restarts = 4;
            bo.exhaustive_budget = 0;
            bo.biclique_budget = options.biclique_budget;
            bo.seed = mix_seed(options.seed ^ 0x5eed, static_cast<std::uint64_t>(r * 64 + copies));
            auto k = find_blowup(g, rest, copies, bo);
            if (!k) continue;

            RootedBlowup out;
            out.blowup.reduced = reduced;
            out.support = choice->support;
            out.root = 0;
            if (single) {
                out.blowup.family.clusters.push_back(root_set);
                for (const auto& c : k->family.clusters) out.blowup.family.clusters.push_back(c);
                out.blowup.family.balance = Balance::quasi(t, 0.0);
            } else {
                // Auxiliary bipartite graph: root vertices versus the copies
                // R'_i = (i-th vertex of every cluster of K); u ~ R'_i when u
                // is adjacent to the copy at every root-neighbour position.
                const int nr = static_cast<int>(root_set.size());
                Graph aux(nr + copies);
                for (int a = 0; a < nr; ++a)
                    for (int i = 0; i < copies; ++i) {
                        bool ok = true;
                        for (int j = 1; j < s && ok; ++j)
                            if (reduced.has_edge(0, j)) ok = g.has_edge(root_set[a], k->family.clusters[j - 1][i]);
                        if (ok) aux.add_edge(a, nr + i);
                    }
                VertexList left(static_cast<std::size_t>(nr)), right(static_cast<std::size_t>(copies));
                for (int a = 0; a < nr; ++a) left[a] = a;
                for (int i = 0; i < copies; ++i) right[i] = nr + i;
                auto bc = find_biclique({&aux, left, right, t, options.biclique_budget});
                if (!bc) continue;
                VertexList root_cluster;
                for (Vertex a : bc->a) root_cluster.push_back(root_set[a]);
                std::sort(root_cluster.begin(), root_cluster.end());
                out.blowup.family.clusters.push_back(root_cluster);
                for (int j = 1; j < s; ++j) {
                    VertexList cluster;
                    for (Vertex i : bc->b) cluster.push_back(k->family.clusters[j - 1][i - nr]);
                    std::sort(cluster.begin(), cluster.end());
                    out.blowup.family.clusters.push_back(cluster);
                }
                out.blowup.family.balance = Balance::exact(t);
            }
            if (!verify_blowup_hosted(g, out.blowup).passed())
                throw Error("internal: rooted blow-up is not hosted");
            return out;
        }
    }

    if (!options.direct_fallback) return std::nullopt;
    BlowupSearchOptions bo;
    std::vector<VertexList> frame{root_set};
    for (int j = 1; j < s; ++j) frame.push_back(outside_list);
    bo.frame = frame;
    bo.restarts = 8;
    bo.exhaustive_budget = options.exhaustive_budget;
    bo.biclique_budget = options.biclique_budget;
    bo.seed = mix_seed(options.seed ^ 0xfa11, 0);
    std::vector<int> sizes(static_cast<std::size_t>(s), t);
    if (single) sizes[0] = 1;
    // K_s hosts a blow-up of every admissible T, so it is the last resort.
    std::vector<Graph> patterns;
    if (last_reduced) patterns.push_back(*last_reduced);
    const Graph clique = Graph::complete(s);
    if (s - 1 >= (0.5 + eps / 2.0) * s - 1e-9 && (!last_reduced || !(*last_reduced == clique)))
        patterns.push_back(clique);
    std::optional<Blowup> direct;
    for (const auto& pattern : patterns)
        if ((direct = find_blowup_sized(g, pattern, sizes, bo))) break;
    if (!direct) return std::nullopt;
    RootedBlowup out;
    out.blowup = *direct;
    out.blowup.family.balance = single ? Balance::quasi(t, 0.0) : Balance::exact(t);
    out.root = 0;
    out.support = last_support;
    out.via_fallback = true;
    return out;
}

}  // namespace blowup
