#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "blowup/biclique.hpp"
#include "blowup/graph.hpp"

namespace blowup {

struct Connection {
    VertexList u;  // ⊆ U
    VertexList v;  // ⊆ V
    VertexList w;  // ⊆ W, completely joined to both u and v
};

struct ConnectTelemetry {
    int working_order = 0;   // |U| + |V| + |W|
    int w_u = 0;             // |{w : deg(w, U) ≥ εm/8}|
    int w_v = 0;
    int w_star = 0;          // |W_U ∩ W_V|
    bool used_fallback = false;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

struct ConnectOptions {
    double eps = 0.25;
    std::uint64_t budget = kDefaultBicliqueBudget;
    /// Per-vertex admission for W (e.g. a per-cluster usage cap); all of W when empty.
    std::function<bool(Vertex)> admit_w;
};

/// Finds m'-sets U' ⊆ U, V' ⊆ V, W' ⊆ W with K(U',W') and K(V',W') in g.
/// The search first runs over W* = W_U ∩ W_V (vertices with at least εm/8
/// neighbours in each of U and V) and then over the rest of W, so with an
/// unlimited budget std::nullopt proves that no such triple exists.
std::optional<Connection> connect_clusters(const Graph& g, const VertexList& u, const VertexList& v,
                                           const VertexList& w, int m_prime, const ConnectOptions& options = {},
                                           ConnectTelemetry* telemetry = nullptr);

}  // namespace blowup
