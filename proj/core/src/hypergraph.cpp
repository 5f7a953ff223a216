#include "blowup/hypergraph.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

Hypergraph Hypergraph::explicit_edges(int n, int s, std::vector<VertexList> edges)
{
    if (s < 1) throw Error("uniformity must be positive");
    Hypergraph h;
    h.n_ = n;
    h.s_ = s;
    h.explicit_ = true;
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != s) throw Error("edge has wrong size");
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw Error("edge has repeated vertex");
        if (e.front() < 0 || e.back() >= n) throw Error("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    h.edges_ = std::move(edges);
    h.incidence_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < h.edges_.size(); ++i)
        for (Vertex v : h.edges_[i]) h.incidence_[v].push_back(i);
    return h;
}

Hypergraph Hypergraph::implicit(int n, int s, Oracle oracle)
{
    Hypergraph h;
    h.n_ = n;
    h.s_ = s;
    h.explicit_ = false;
    h.oracle_ = std::move(oracle);
    return h;
}

Hypergraph Hypergraph::complete(int n, int s)
{
    std::vector<VertexList> edges;
    VertexList cur(static_cast<std::size_t>(s));
    // Lexicographic enumeration of s-subsets.
    for (int i = 0; i < s; ++i) cur[i] = i;
    if (s <= n) {
        while (true) {
            edges.push_back(cur);
            int i = s - 1;
            while (i >= 0 && cur[i] == n - s + i) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    return explicit_edges(n, s, std::move(edges));
}

bool Hypergraph::has_edge(std::span<const Vertex> set) const
{
    if (static_cast<int>(set.size()) != s_) return false;
    VertexList key(set.begin(), set.end());
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) return false;
    if (!explicit_) return oracle_(key);
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

const std::vector<VertexList>& Hypergraph::edges() const
{
    if (!explicit_) throw Error("hypergraph is implicit; edges are not materialised");
    return edges_;
}

const std::vector<std::size_t>& Hypergraph::incident(Vertex v) const
{
    if (!explicit_) throw Error("hypergraph is implicit; edges are not materialised");
    return incidence_[v];
}

int Hypergraph::degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

int hypergraph_min_degree(const Hypergraph& p)
{
    if (!p.is_explicit()) throw Error("degree requires explicit edges or use property_degree_estimate");
    if (p.order() == 0) throw Error("empty hypergraph");
    int best = p.degree(0);
    for (Vertex v = 1; v < p.order(); ++v) best = std::min(best, p.degree(v));
    return best;
}

}  // namespace blowup
