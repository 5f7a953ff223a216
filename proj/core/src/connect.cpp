#include "blowup/connect.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

namespace {

struct TripleSearch {
    const Graph& g;
    std::vector<Vertex> order;
    int need;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    VertexList chosen;
    Bitset final_u, final_v;

    bool run(std::size_t from, const Bitset& cu, const Bitset& cv)
    {
        if (static_cast<int>(chosen.size()) == need) {
            final_u = cu;
            final_v = cv;
            return true;
        }
        const int missing = need - static_cast<int>(chosen.size());
        for (std::size_t i = from; i + static_cast<std::size_t>(missing) <= order.size(); ++i) {
            const Vertex w = order[i];
            if (g.degree_into(w, cu) < need || g.degree_into(w, cv) < need) continue;
            if (nodes >= budget) {
                exhausted = true;
                return false;
            }
            ++nodes;
            chosen.push_back(w);
            if (run(i + 1, cu & g.neighbours(w), cv & g.neighbours(w))) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<Connection> connect_clusters(const Graph& g, const VertexList& u, const VertexList& v,
                                           const VertexList& w, int m_prime, const ConnectOptions& options,
                                           ConnectTelemetry* telemetry)
{
    if (u.size() != v.size()) throw Error("unbalanced connection request");
    if (m_prime < 1) throw Error("connection size must be positive");
    const auto n = static_cast<std::size_t>(g.order());
    const Bitset us = Bitset::from_list(n, u);
    const Bitset vs = Bitset::from_list(n, v);
    const Bitset ws = Bitset::from_list(n, w);
    if (us.intersects(vs) || us.intersects(ws) || vs.intersects(ws)) throw Error("sets not disjoint");

    ConnectTelemetry tel;
    tel.working_order = static_cast<int>(u.size() + v.size() + w.size());
    const double threshold = options.eps * static_cast<double>(u.size()) / 8.0;

    std::vector<Vertex> star, rest;
    std::vector<int> du(n, 0), dv(n, 0);
    for (Vertex x : w) {
        du[x] = g.degree_into(x, us);
        dv[x] = g.degree_into(x, vs);
        const bool in_u = du[x] >= threshold, in_v = dv[x] >= threshold;
        tel.w_u += in_u;
        tel.w_v += in_v;
        if (options.admit_w && !options.admit_w(x)) continue;
        if (du[x] < m_prime || dv[x] < m_prime) continue;
        (in_u && in_v ? star : rest).push_back(x);
    }
    for (Vertex x : w) tel.w_star += (du[x] >= threshold && dv[x] >= threshold);

    auto by_degree = [&](Vertex a, Vertex b) {
        const int ka = std::min(du[a], dv[a]), kb = std::min(du[b], dv[b]);
        if (ka != kb) return ka > kb;
        if (du[a] + dv[a] != du[b] + dv[b]) return du[a] + dv[a] > du[b] + dv[b];
        return a < b;
    };
    std::sort(star.begin(), star.end(), by_degree);
    std::sort(rest.begin(), rest.end(), by_degree);

    auto attempt = [&](std::vector<Vertex> order, std::uint64_t budget) -> std::optional<Connection> {
        TripleSearch ts{g, std::move(order), m_prime, budget, 0, false, {}, {}, {}};
        const bool ok = ts.run(0, us, vs);
        tel.nodes += ts.nodes;
        tel.budget_exhausted = tel.budget_exhausted || ts.exhausted;
        if (!ok) return std::nullopt;
        Connection c;
        c.w = ts.chosen;
        std::sort(c.w.begin(), c.w.end());
        c.u = ts.final_u.to_list();
        c.v = ts.final_v.to_list();
        c.u.resize(static_cast<std::size_t>(m_prime));
        c.v.resize(static_cast<std::size_t>(m_prime));
        return c;
    };

    auto found = attempt(star, options.budget);
    if (!found && !rest.empty()) {
        // Full candidate set, W* first, so that absence is conclusive.
        tel.used_fallback = true;
        std::vector<Vertex> all = star;
        all.insert(all.end(), rest.begin(), rest.end());
        const std::uint64_t left = options.budget > tel.nodes ? options.budget - tel.nodes : 0;
        found = attempt(std::move(all), left);
    }
    if (telemetry) *telemetry = tel;
    return found;
}

}  // namespace blowup
