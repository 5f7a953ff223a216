#include "blowup/tiling.hpp"

#include <algorithm>
#include <cmath>

#include "blowup/error.hpp"
#include "blowup/matching.hpp"
#include "blowup/rng.hpp"

namespace blowup {

std::size_t Tiling::covered() const
{
    std::size_t total = 0;
    for (const auto& t : tuples) total += t.vertex_count();
    return total;
}

bool Tiling::disjoint(int n) const
{
    Bitset seen(static_cast<std::size_t>(n));
    for (const auto& t : tuples)
        for (const auto& part : t.parts)
            for (Vertex v : part) {
                if (v < 0 || v >= n || seen.test(v)) return false;
                seen.set(v);
            }
    return true;
}

void TilingParams::validate() const
{
    if (s < 2) throw Error("tiling needs s >= 2");
    if (!(eta > 0.0 && eta < 1.0)) throw Error("eta must lie in (0,1)");
    if (!(rho > 0.0 && rho < 1.0)) throw Error("rho must lie in (0,1)");
    if (!(mu > 0.0)) throw Error("mu must be positive");
    if (m0 < 1 || m_min < 1) throw Error("block sizes must be positive");
    if (!(m_shrink > 0.0 && m_shrink <= 1.0)) throw Error("m_shrink must lie in (0,1]");
}

int TilingParams::rounds() const
{
    if (max_rounds > 0) return max_rounds;
    return static_cast<int>(std::ceil(1.0 / (eta * eta) - 1e-9));
}

double TilingParams::d(int round) const
{
    if (round < static_cast<int>(d_override.size())) return d_override[round];
    return (mu / 16.0) / std::ldexp(1.0, round);
}

double TilingParams::eps(int round) const { return d(round) / 2.0; }

double TilingParams::gamma(int round) const
{
    if (round < static_cast<int>(gamma_override.size())) return gamma_override[round];
    return std::max(std::exp(-std::pow(eps(round), -2.0 * s)), gamma_floor);
}

int TilingParams::m(int round) const
{
    return std::max(m_min, static_cast<int>(std::floor(m0 * std::pow(m_shrink, round))));
}

namespace {

double block_density(const Hypergraph& p, const std::vector<VertexList>& parts, int trials, Rng& rng)
{
    if (trials <= 0) return tuple_density(p, parts);
    int hits = 0;
    VertexList tuple(parts.size());
    for (int k = 0; k < trials; ++k) {
        for (std::size_t i = 0; i < parts.size(); ++i) tuple[i] = parts[i][rng.below(parts[i].size())];
        hits += p.has_edge(tuple) ? 1 : 0;
    }
    return static_cast<double>(hits) / trials;
}

/// Greedy maximal matching of an explicit hypergraph, edges taken in the
/// given order.
std::vector<VertexList> greedy_matching(const Hypergraph& r, const std::vector<std::size_t>& order)
{
    Bitset used(static_cast<std::size_t>(r.order()));
    std::vector<VertexList> out;
    for (std::size_t idx : order) {
        const auto& e = r.edges()[idx];
        bool free = true;
        for (Vertex v : e) free = free && !used.test(v);
        if (!free) continue;
        for (Vertex v : e) used.set(v);
        out.push_back(e);
    }
    return out;
}

}  // namespace

Tiling tiling_increment(const Hypergraph& p, const Tiling& q1, const TilingParams& params, int round,
                        IncrementTelemetry* telemetry)
{
    params.validate();
    if (p.uniformity() != params.s) throw Error("uniformity mismatch");
    const int n = p.order();
    if (!q1.disjoint(n)) throw Error("input tiling not disjoint");
    IncrementTelemetry local;
    IncrementTelemetry& tel = telemetry ? *telemetry : local;
    tel = {};
    tel.covered_before = q1.covered();

    Bitset covered(static_cast<std::size_t>(n));
    for (const auto& t : q1.tuples)
        for (const auto& part : t.parts)
            for (Vertex v : part) covered.set(v);
    VertexList free;
    for (Vertex v = 0; v < n; ++v)
        if (!covered.test(v)) free.push_back(v);
    Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(round)));
    rng.shuffle(free);

    const int m = params.m(round);
    const int s = params.s;
    tel.block_size = m;
    std::vector<VertexList> blocks;
    for (std::size_t i = 0; i + static_cast<std::size_t>(m) <= free.size(); i += m) {
        VertexList b(free.begin() + static_cast<long>(i), free.begin() + static_cast<long>(i + m));
        std::sort(b.begin(), b.end());
        blocks.push_back(b);
    }
    const int nb = static_cast<int>(blocks.size());
    tel.blocks = nb;
    if (nb < s) throw Error("increment stalled: fewer than s blocks");
    double candidates = 1.0;
    for (int i = 0; i < s; ++i) candidates = candidates * (nb - i) / (i + 1);
    if (candidates > static_cast<double>(params.max_reduced_candidates))
        throw Error("reduced graph too large; raise the block size");

    // Reduced s-graph on blocks.
    std::vector<VertexList> redges;
    std::vector<double> rdensity;
    VertexList pick(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) pick[i] = i;
    for (;;) {
        std::vector<VertexList> parts;
        for (Vertex b : pick) parts.push_back(blocks[b]);
        const double dens = block_density(p, parts, params.density_trials, rng);
        if (dens >= params.reduced_threshold()) {
            redges.push_back(pick);
            rdensity.push_back(dens);
        }
        int i = s - 1;
        while (i >= 0 && pick[i] == nb - s + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    tel.reduced_edges = static_cast<int>(redges.size());
    Hypergraph reduced = Hypergraph::explicit_edges(nb, s, redges);
    {
        double denom = 1.0;
        for (int i = 0; i < s - 1; ++i) denom = denom * (nb - 1 - i) / (i + 1);
        tel.reduced_min_degree_ratio = denom > 0 ? hypergraph_min_degree(reduced) / denom : 0.0;
    }

    // Perfect matching on the largest divisible prefix of blocks (dropping
    // those of smallest reduced degree); greedy maximal matching otherwise.
    std::vector<VertexList> matched;
    {
        VertexList keep(static_cast<std::size_t>(nb));
        for (int b = 0; b < nb; ++b) keep[b] = b;
        std::stable_sort(keep.begin(), keep.end(),
                         [&](Vertex a, Vertex b) { return reduced.degree(a) > reduced.degree(b); });
        keep.resize(static_cast<std::size_t>(nb - nb % s));
        std::sort(keep.begin(), keep.end());
        std::vector<int> index(static_cast<std::size_t>(nb), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
        std::vector<VertexList> sub;
        for (const auto& e : redges) {
            VertexList mapped;
            for (Vertex b : e)
                if (index[b] >= 0) mapped.push_back(index[b]);
            if (static_cast<int>(mapped.size()) == s) sub.push_back(mapped);
        }
        MatchingOptions mo;
        mo.seed = mix_seed(params.seed ^ 0x3a7c, static_cast<std::uint64_t>(round));
        mo.partition_retries = 40;
        auto pm = hypergraph_perfect_matching(Hypergraph::explicit_edges(static_cast<int>(keep.size()), s, sub), s, mo);
        if (pm) {
            tel.perfect_matching = true;
            for (const auto& e : pm->edges) {
                VertexList orig;
                for (Vertex i : e) orig.push_back(keep[i]);
                matched.push_back(orig);
            }
        } else {
            std::vector<std::size_t> order(redges.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return rdensity[a] > rdensity[b]; });
            matched = greedy_matching(reduced, order);
        }
    }
    tel.matched = static_cast<int>(matched.size());

    Tiling out = q1;
    tel.recycled = static_cast<int>(q1.tuples.size());
    const double d = params.d(round);
    for (std::size_t k = 0; k < matched.size(); ++k) {
        std::vector<VertexList> parts;
        for (Vertex b : matched[k]) parts.push_back(blocks[b]);
        if (tuple_density(p, parts) < d) continue;
        RegularityCheck check = params.check;
        check.seed = mix_seed(params.seed ^ 0x7e9, static_cast<std::uint64_t>(round) * 100003 + k);
        if (auto tuple = find_lower_regular_tuple(p, parts, params.rho, d, check)) {
            out.tuples.push_back(std::move(*tuple));
            ++tel.fresh;
        }
    }
    tel.covered_after = out.covered();
    if (tel.fresh == 0) throw Error("increment stalled: no regular tuple found");
    return out;
}

TilingResult almost_perfect_tiling(const Hypergraph& p, const TilingParams& params)
{
    params.validate();
    TilingResult result;
    const int n = p.order();
    for (int i = 0; i < params.rounds(); ++i) {
        if (static_cast<double>(n) - static_cast<double>(result.tiling.covered()) <= params.eta * n) break;
        TilingRound row;
        row.round = i;
        row.d = params.d(i);
        row.eps = params.eps(i);
        row.gamma = params.gamma(i);
        row.m = params.m(i);
        try {
            result.tiling = tiling_increment(p, result.tiling, params, i, &row.increment);
        } catch (const Error& e) {
            row.stall = e.what();
            result.stall = "round " + std::to_string(i) + ": " + e.what();
        }
        row.covered_fraction = n > 0 ? static_cast<double>(result.tiling.covered()) / n : 0.0;
        result.rounds.push_back(row);
        if (result.stall) break;
    }
    return result;
}

}  // namespace blowup
