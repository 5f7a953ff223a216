#pragma once

#include <functional>
#include <span>
#include <vector>

#include "blowup/bitset.hpp"

namespace blowup {

/// s-uniform hypergraph on vertices 0..n-1, either with an explicit edge list
/// or defined through a membership oracle. The mode is fixed at construction.
class Hypergraph {
public:
    using Oracle = std::function<bool(std::span<const Vertex>)>;

    /// Explicit hypergraph; edges are normalised to sorted order and deduplicated.
    static Hypergraph explicit_edges(int n, int s, std::vector<VertexList> edges);
    /// Implicit hypergraph; `oracle` receives sorted s-sets.
    static Hypergraph implicit(int n, int s, Oracle oracle);
    static Hypergraph complete(int n, int s);

    int order() const { return n_; }
    int uniformity() const { return s_; }
    bool is_explicit() const { return explicit_; }

    /// Membership test; `set` need not be sorted.
    bool has_edge(std::span<const Vertex> set) const;

    const std::vector<VertexList>& edges() const;
    /// Indices into edges() of the edges containing v (explicit mode only).
    const std::vector<std::size_t>& incident(Vertex v) const;
    int degree(Vertex v) const;

private:
    Hypergraph() = default;

    int n_ = 0;
    int s_ = 0;
    bool explicit_ = true;
    std::vector<VertexList> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
    Oracle oracle_;
};

/// Minimum vertex degree of an explicit hypergraph.
int hypergraph_min_degree(const Hypergraph& p);

}  // namespace blowup
