#include "blowup/graph.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

Graph::Graph(int n) : n_(n)
{
    if (n < 0) throw Error("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n)
{
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& row : rows_) total += row.count();
    return total / 2;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("vertex out of range");
    if (u == v) throw Error("loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    rows_[u].reset(v);
    rows_[v].reset(u);
}

Bitset Graph::common_neighbours(const VertexList& vs, const Bitset& within) const
{
    Bitset out = within;
    for (Vertex v : vs) out &= rows_[v];
    return out;
}

Graph Graph::induced(const VertexList& vs) const
{
    Graph h(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (has_edge(vs[i], vs[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return h;
}

Graph Graph::without_edges_inside(const Bitset& set) const
{
    Graph h = *this;
    set.for_each([&](Vertex v) { h.rows_[v].subtract(set); });
    return h;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        rows_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

int min_degree(const Graph& g)
{
    if (g.order() == 0) throw Error("empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

}  // namespace blowup
