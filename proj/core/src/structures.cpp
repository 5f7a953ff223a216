#include "blowup/structures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blowup/error.hpp"

namespace blowup {

const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::size_t SetFamily::vertex_count() const
{
    std::size_t total = 0;
    for (const auto& c : clusters) total += c.size();
    return total;
}

bool SetFamily::disjoint() const
{
    VertexList all;
    for (const auto& c : clusters) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

namespace {

bool within(std::size_t size, double m, double eta)
{
    // Small tolerance so that declared bounds computed in floating point
    // do not reject sizes that sit exactly on them.
    const double lo = (1.0 - eta) * m - 1e-9;
    const double hi = (1.0 + eta) * m + 1e-9;
    const double s = static_cast<double>(size);
    return s >= lo && s <= hi;
}

}  // namespace

bool SetFamily::balanced() const
{
    switch (balance.kind) {
    case BalanceKind::None: return true;
    case BalanceKind::Exact:
        return std::all_of(clusters.begin(), clusters.end(), [&](const VertexList& c) {
            return static_cast<double>(c.size()) == balance.m;
        });
    case BalanceKind::Approx:
        return std::all_of(clusters.begin(), clusters.end(),
                           [&](const VertexList& c) { return within(c.size(), balance.m, balance.eta); });
    case BalanceKind::Quasi: {
        auto star = singleton_index();
        if (!star) return false;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            if (i != *star && !within(clusters[i].size(), balance.m, balance.eta)) return false;
        return true;
    }
    }
    return false;
}

std::optional<std::size_t> SetFamily::singleton_index() const
{
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (clusters[i].size() != 1) continue;
        if (found) return std::nullopt;
        found = i;
    }
    return found;
}

VertexList Blowup::vertices() const
{
    VertexList out;
    for (const auto& c : family.clusters) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> cluster_size_bounds(int n, double c, double eta)
{
    const double base = c * std::log(static_cast<double>(n));
    const double lo = std::ceil((1.0 - eta) * base - 1e-9);
    const double hi = std::floor((1.0 + eta) * base + 1e-9);
    return {static_cast<int>(std::max(lo, 0.0)), static_cast<int>(std::max(hi, 0.0))};
}

Verdict is_complete_bipartite(const Graph& g, const VertexList& a, const VertexList& b)
{
    Bitset bs(static_cast<std::size_t>(g.order()));
    for (Vertex v : b) bs.set(v);
    for (Vertex v : a)
        if (bs.test(v)) throw Error("sets not disjoint");
    for (Vertex u : a) {
        if (bs.is_subset_of(g.neighbours(u))) continue;
        for (Vertex v : b) {
            if (!g.has_edge(u, v)) {
                Verdict out = Verdict::fail("missing cross edge");
                out.missing_pair = std::make_pair(u, v);
                return out;
            }
        }
    }
    return Verdict::pass();
}

namespace {

Verdict check_vertices(const Graph& g, const std::vector<VertexList>& clusters)
{
    Bitset seen(static_cast<std::size_t>(g.order()));
    for (const auto& c : clusters) {
        for (Vertex v : c) {
            if (v < 0 || v >= g.order()) {
                Verdict out = Verdict::fail("vertex out of range");
                out.witness_sets = {{v}};
                return out;
            }
            if (seen.test(v)) {
                Verdict out = Verdict::fail("clusters not disjoint");
                out.witness_sets = {{v}};
                return out;
            }
            seen.set(v);
        }
    }
    return Verdict::pass();
}

}  // namespace

Verdict verify_blowup_hosted(const Graph& g, const Blowup& b)
{
    if (b.family.size() != static_cast<std::size_t>(b.reduced.order()))
        throw Error("cluster count does not match reduced graph order");
    if (auto v = check_vertices(g, b.family.clusters); !v.passed()) return v;
    for (auto [x, y] : b.reduced.edges()) {
        auto v = is_complete_bipartite(g, b.family.clusters[x], b.family.clusters[y]);
        if (!v.passed()) return v;
    }
    return Verdict::pass();
}

Verdict verify_cycle_blowup(const Graph& g, const CycleBlowupCertificate& cert)
{
    const auto& cl = cert.clusters;
    if (cl.size() < 3) return Verdict::fail("degenerate cycle");
    if (cert.n != g.order()) return Verdict::fail("vertex count mismatch");
    if (auto v = check_vertices(g, cl); !v.passed()) return v;

    std::size_t covered = 0;
    for (const auto& c : cl) covered += c.size();
    if (covered != static_cast<std::size_t>(g.order())) {
        Bitset seen(static_cast<std::size_t>(g.order()));
        for (const auto& c : cl)
            for (Vertex v : c) seen.set(v);
        Verdict out = Verdict::fail("not spanning");
        Bitset missing = g.full_set();
        missing.subtract(seen);
        out.witness_sets = {missing.to_list()};
        return out;
    }

    const auto [lo, hi] = cluster_size_bounds(cert.n, cert.c, cert.eta);
    for (std::size_t i = 0; i < cl.size(); ++i) {
        const int size = static_cast<int>(cl[i].size());
        if (size == 0 || size < lo || size > hi) {
            Verdict out = Verdict::fail("size out of range");
            out.witness_sets = {cl[i]};
            return out;
        }
    }

    for (std::size_t i = 0; i < cl.size(); ++i) {
        const auto& next = cl[(i + 1) % cl.size()];
        auto v = is_complete_bipartite(g, cl[i], next);
        if (!v.passed()) {
            v.reason = "consecutive clusters not completely joined";
            return v;
        }
    }
    return Verdict::pass();
}

}  // namespace blowup
