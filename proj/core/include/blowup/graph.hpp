#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "blowup/bitset.hpp"

namespace blowup {

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }

    const Bitset& neighbours(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return static_cast<int>(rows_[v].count()); }
    int degree_into(Vertex v, const Bitset& set) const
    {
        return static_cast<int>(rows_[v].intersect_count(set));
    }

    /// Common neighbourhood of all vertices in `vs`, restricted to `within`.
    Bitset common_neighbours(const VertexList& vs, const Bitset& within) const;

    /// Induced subgraph on `vs`; vertex i of the result is vs[i].
    Graph induced(const VertexList& vs) const;

    /// Copy with every edge inside `set` removed.
    Graph without_edges_inside(const Bitset& set) const;

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    Bitset empty_set() const { return Bitset(static_cast<std::size_t>(n_)); }
    Bitset full_set() const
    {
        Bitset b(static_cast<std::size_t>(n_));
        b.fill();
        return b;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Bitset> rows_;
};

/// Minimum degree; throws on the empty graph.
int min_degree(const Graph& g);

}  // namespace blowup
