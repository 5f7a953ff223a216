#include "blowup/cycle.hpp"

#include <algorithm>
#include <cmath>

#include "blowup/connect.hpp"
#include "blowup/error.hpp"
#include "blowup/hamilton.hpp"

namespace blowup {

AbsorbedBlowup absorb_singleton(const Blowup& b)
{
    const auto star = b.family.singleton_index();
    if (!star) throw Error("family has no unique singleton");
    const int order = b.reduced.order();
    if (static_cast<int>(b.family.clusters.size()) != order) throw Error("cluster count differs from reduced order");
    const Vertex vs = static_cast<Vertex>(*star);

    VertexList old_of;
    for (Vertex v = 0; v < order; ++v)
        if (v != vs) old_of.push_back(v);
    const int k = static_cast<int>(old_of.size());
    Graph rest(k);
    for (int a = 0; a < k; ++a)
        for (int c = a + 1; c < k; ++c)
            if (b.reduced.has_edge(old_of[a], old_of[c])) rest.add_edge(a, c);
    auto cycle = dirac_hamilton_cycle(rest);
    if (!cycle) throw Error("absorption failed: no Hamilton cycle in R - v*");

    AbsorbedBlowup out;
    std::optional<std::size_t> best_size;
    for (int j = 0; j < k; ++j) {
        const Vertex cj = (*cycle)[j];
        const Vertex cj2 = (*cycle)[(j + 2) % k];
        if (!b.reduced.has_edge(vs, old_of[cj]) || !b.reduced.has_edge(vs, old_of[cj2])) continue;
        const Vertex target = (*cycle)[(j + 1) % k];
        const std::size_t size = b.family.clusters[old_of[target]].size();
        if (!best_size || size < *best_size) {
            best_size = size;
            out.j = j;
            out.target = target;
        }
    }
    if (!best_size) throw Error("absorption failed");

    out.cycle = *cycle;
    out.blowup.reduced = Graph(k);
    for (int a = 0; a < k; ++a)
        for (int c = a + 1; c < k; ++c) {
            if (!rest.has_edge(a, c)) continue;
            const bool at_target = a == out.target || c == out.target;
            const Vertex other = a == out.target ? c : a;
            if (at_target && !b.reduced.has_edge(vs, old_of[other])) continue;
            out.blowup.reduced.add_edge(a, c);
        }
    for (int a = 0; a < k; ++a) {
        VertexList cl = b.family.clusters[old_of[a]];
        if (a == out.target) cl.push_back(b.family.clusters[vs].front());
        std::sort(cl.begin(), cl.end());
        out.blowup.family.clusters.push_back(cl);
    }
    out.blowup.family.balance = Balance::approx(b.family.balance.m, 2.0 * b.family.balance.eta);
    return out;
}

std::vector<VertexList> subdivide(const VertexList& cluster, int ell)
{
    if (ell < 1) throw Error("ell must be at least 1");
    const int size = static_cast<int>(cluster.size());
    std::vector<VertexList> out;
    std::size_t at = 0;
    for (int p = 0; p < ell; ++p) {
        const int len = size / ell + (p < size % ell ? 1 : 0);
        out.emplace_back(cluster.begin() + static_cast<long>(at), cluster.begin() + static_cast<long>(at + len));
        at += static_cast<std::size_t>(len);
    }
    return out;
}

CycleBlowupCertificate subdivide_and_wind(const std::vector<WindingPiece>& pieces,
                                          const std::vector<Connector>& connectors, int ell, int n, double c,
                                          double eta)
{
    const std::size_t t = pieces.size();
    if (t == 0) throw Error("no pieces to wind");
    if (connectors.size() != t) throw Error("one connector per piece required");
    for (std::size_t i = 0; i < t; ++i) {
        if (connectors[i].from != i || connectors[i].to != (i + 1) % t)
            throw Error("connector endpoint mismatch at index " + std::to_string(i));
        if (pieces[i].clusters.size() < 2) throw Error("piece " + std::to_string(i) + " has fewer than 2 clusters");
    }

    CycleBlowupCertificate cert;
    cert.n = n;
    cert.c = c;
    cert.eta = eta;
    for (std::size_t i = 0; i < t; ++i) {
        const auto& clusters = pieces[i].clusters;
        const std::size_t k = clusters.size();
        std::vector<std::vector<VertexList>> parts;
        for (const auto& cl : clusters) {
            VertexList sorted = cl;
            std::sort(sorted.begin(), sorted.end());
            if (static_cast<int>(sorted.size()) < ell)
                throw Error("cluster of piece " + std::to_string(i) + " smaller than ell");
            parts.push_back(subdivide(sorted, ell));
        }
        cert.clusters.push_back(connectors[(i + t - 1) % t].w2);
        for (int p = 0; p < ell; ++p) {
            for (std::size_t q = 1; q < k; ++q) cert.clusters.push_back(parts[q][p]);
            cert.clusters.push_back(parts[0][p]);
        }
        cert.clusters.push_back(connectors[i].w1);
        cert.clusters.push_back(connectors[i].w3);
    }
    return cert;
}

namespace {

struct ClusterRef {
    int piece = -1;
    int pos = -1;
};

std::string cover_summary(const CoverResult& cover)
{
    std::string out = std::to_string(cover.blowups.size()) + " families, " + std::to_string(cover.uncovered.size()) +
                      " uncovered";
    for (const auto& d : cover.telemetry.diagnostics) out += "; " + d;
    return out;
}

}  // namespace

CycleOutcome spanning_cycle_blowup(const Graph& g, const CoverParams& params)
{
    params.validate();
    CycleOutcome out;
    auto row = [&](const std::string& stage, int index, const std::string& metric, double value) {
        out.telemetry.push_back({stage, index, metric, value});
    };
    auto fail = [&](const std::string& stage, int iteration, const std::string& summary) {
        out.failure = CycleFailure{stage, iteration, summary};
        return out;
    };
    const int n = g.order();
    if (n < params.n_floor) return fail("precondition", 0, "n below n_floor");
    if (n < params.s) return fail("precondition", 0, "graph smaller than s");
    row("input", 0, "n", n);
    row("input", 0, "min_degree", min_degree(g));

    CoverResult cover;
    try {
        cover = simple_blowup_cover(g, params);
    } catch (const Error& e) {
        return fail("cover", 0, e.what());
    }
    const auto& ct = cover.telemetry;
    row("cover", 0, "tiling_tuples", ct.tiling_tuples);
    row("cover", 0, "framed_blowups", ct.framed_blowups);
    row("cover", 0, "almost_uncovered", static_cast<double>(ct.almost_uncovered));
    row("cover", 0, "rooted_pickups", ct.rooted_pickups);
    row("cover", 0, "vertex_pickups", ct.vertex_pickups);
    row("cover", 0, "insertions", ct.insertions);
    row("cover", 0, "families", ct.families);
    if (Verdict v = verify_simple_cover(g, cover, params); !v.passed())
        return fail("cover", 0, v.reason + " (" + cover_summary(cover) + ")");

    // Absorption; each cycle is rotated so the merge target comes first.
    std::vector<std::vector<VertexList>> clusters;
    for (std::size_t i = 0; i < cover.blowups.size(); ++i) {
        AbsorbedBlowup ab;
        try {
            ab = absorb_singleton(cover.blowups[i]);
        } catch (const Error& e) {
            return fail("absorb", static_cast<int>(i), e.what());
        }
        const auto at = std::find(ab.cycle.begin(), ab.cycle.end(), ab.target);
        std::rotate(ab.cycle.begin(), at, ab.cycle.end());
        std::vector<VertexList> ordered;
        for (Vertex q : ab.cycle) ordered.push_back(ab.blowup.family.clusters[q]);
        clusters.push_back(ordered);
        row("absorb", static_cast<int>(i), "target_size", static_cast<double>(ordered.front().size()));
    }

    // Connection loop.
    const int t = static_cast<int>(clusters.size());
    const int m_conn = params.m_conn(n);
    const int ell = params.ell();
    const double m_main = params.m3(n);
    std::vector<ClusterRef> owner(static_cast<std::size_t>(n));
    for (int i = 0; i < t; ++i)
        for (int q = 0; q < static_cast<int>(clusters[i].size()); ++q)
            for (Vertex v : clusters[i][q]) owner[v] = {i, q};
    std::vector<std::vector<int>> used(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) used[i].assign(clusters[i].size(), 0);
    // Connector vertices each cluster still owes: W2 from every head, W1 from every tail.
    std::vector<std::vector<int>> owed(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        owed[i].assign(clusters[i].size(), 0);
        owed[i].front() += m_conn;
        owed[i].back() += m_conn;
    }
    Bitset k_set(static_cast<std::size_t>(n));
    std::vector<Connector> connectors;
    auto remove_from = [&](const VertexList& vs) {
        for (Vertex v : vs) {
            auto [i, q] = owner[v];
            auto& cl = clusters[i][q];
            cl.erase(std::find(cl.begin(), cl.end(), v));
            ++used[i][q];
            k_set.set(v);
        }
    };

    for (int i = 0; i < t; ++i) {
        const int next = (i + 1) % t;
        const VertexList tail = clusters[i].back();
        const VertexList head = clusters[next].front();
        const int tail_pos = static_cast<int>(clusters[i].size()) - 1;

        // Avoid set: clusters that already lost at least η m vertices.
        const double cap = params.eta * m_main;
        std::size_t avoid_size = 0;
        std::vector<std::vector<bool>> avoid(static_cast<std::size_t>(t));
        for (int a = 0; a < t; ++a) {
            avoid[a].assign(clusters[a].size(), false);
            for (std::size_t q = 0; q < clusters[a].size(); ++q)
                if (used[a][q] >= cap) {
                    avoid[a][q] = true;
                    avoid_size += clusters[a][q].size() + static_cast<std::size_t>(used[a][q]);
                }
        }
        row("connect", i, "K", static_cast<double>(k_set.count()));
        row("connect", i, "avoid", static_cast<double>(avoid_size));

        auto admit = [&](Vertex w, bool respect_avoid) {
            auto [a, q] = owner[w];
            if (a < 0) return false;
            if ((a == i && q == tail_pos) || (a == next && q == 0)) return false;
            if (respect_avoid && avoid[a][q]) return false;
            return static_cast<int>(clusters[a][q].size()) - owed[a][q] - 1 >= ell;
        };

        std::optional<Connection> conn;
        bool relaxed = false;
        for (int round = 0; round < 2 && !conn; ++round) {
            const bool respect = round == 0;
            VertexList w_pool;
            for (Vertex w = 0; w < n; ++w)
                if (!k_set.test(w) && admit(w, respect)) w_pool.push_back(w);
            const std::size_t size = std::min(tail.size(), head.size());
            const VertexList& big = tail.size() >= head.size() ? tail : head;
            const VertexList& small = tail.size() >= head.size() ? head : tail;
            // Trim the larger endpoint cluster to the smaller size, trying
            // every window of it.
            for (std::size_t off = 0; off + size <= big.size() && !conn; ++off) {
                VertexList trimmed(big.begin() + static_cast<long>(off), big.begin() + static_cast<long>(off + size));
                const VertexList& u = tail.size() >= head.size() ? trimmed : small;
                const VertexList& v = tail.size() >= head.size() ? small : trimmed;
                if (static_cast<int>(u.size()) < m_conn) break;
                ConnectOptions co;
                co.eps = params.eps;
                co.budget = params.biclique_budget;
                conn = connect_clusters(g, u, v, w_pool, m_conn, co);
            }
            relaxed = !respect;
        }
        if (!conn) return fail("connect", i, "no connector between blow-ups " + std::to_string(i) + " and " +
                                                 std::to_string(next) + " (|K| = " +
                                                 std::to_string(k_set.count()) + ")");
        if (relaxed) row("connect", i, "avoid_relaxed", 1);
        owed[i].back() -= m_conn;
        owed[next].front() -= m_conn;
        remove_from(conn->u);
        remove_from(conn->v);
        remove_from(conn->w);
        connectors.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(next), conn->u, conn->w, conn->v});
    }
    row("connect", t, "K", static_cast<double>(k_set.count()));
    row("connect", t, "K_bound", 3.0 * t * m_conn);

    std::vector<WindingPiece> pieces;
    for (auto& cl : clusters) pieces.push_back({cl});
    CycleBlowupCertificate cert;
    try {
        cert = subdivide_and_wind(pieces, connectors, ell, n, params.c, 4.0 * params.eta);
    } catch (const Error& e) {
        return fail("wind", 0, e.what());
    }
    row("wind", 0, "clusters", static_cast<double>(cert.clusters.size()));
    if (Verdict v = verify_cycle_blowup(g, cert); !v.passed()) return fail("verify", 0, v.reason);
    std::size_t largest = 0;
    for (const auto& cl : cert.clusters) largest = std::max(largest, cl.size());
    row("verify", 0, "largest_cluster", static_cast<double>(largest));
    out.certificate = std::move(cert);
    return out;
}

}  // namespace blowup
