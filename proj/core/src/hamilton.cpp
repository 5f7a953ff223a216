#include "blowup/hamilton.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

namespace {

/// Greedily extends the path at its tail, then at its head.
void extend(const Graph& r, VertexList& path, Bitset& on_path)
{
    for (int pass = 0; pass < 2; ++pass) {
        bool grown = true;
        while (grown) {
            grown = false;
            Bitset fresh = r.neighbours(path.back());
            fresh.subtract(on_path);
            if (fresh.any()) {
                Vertex next = fresh.to_list().front();
                path.push_back(next);
                on_path.set(next);
                grown = true;
            }
        }
        std::reverse(path.begin(), path.end());
    }
}

/// Turns a path whose ends are joined, or have crossing neighbours, into a
/// cycle on the same vertices.
std::optional<VertexList> close(const Graph& r, const VertexList& path)
{
    const std::size_t k = path.size();
    if (r.has_edge(path.front(), path.back())) return path;
    for (std::size_t i = 1; i + 1 < k; ++i) {
        if (r.has_edge(path.front(), path[i + 1]) && r.has_edge(path[i], path.back())) {
            VertexList cycle(path.begin(), path.begin() + static_cast<long>(i + 1));
            cycle.insert(cycle.end(), path.rbegin(), path.rbegin() + static_cast<long>(k - i - 1));
            return cycle;
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_hamilton_cycle(const Graph& r, const VertexList& cycle)
{
    const int n = r.order();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    Bitset seen(static_cast<std::size_t>(n));
    for (Vertex v : cycle) {
        if (v < 0 || v >= n || seen.test(v)) return false;
        seen.set(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!r.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

std::optional<VertexList> dirac_hamilton_cycle(const Graph& r)
{
    const int n = r.order();
    if (n < 3) throw Error("Hamilton cycle needs at least 3 vertices");
    Vertex start = 0;
    for (Vertex v = 1; v < n; ++v)
        if (r.degree(v) > r.degree(start)) start = v;

    VertexList path{start};
    Bitset on_path(static_cast<std::size_t>(n));
    on_path.set(start);
    const long limit = static_cast<long>(n) * n * n + 16;
    bool tail_stuck = false;
    for (long step = 0; step < limit; ++step) {
        extend(r, path, on_path);
        if (auto cycle = close(r, path)) {
            if (static_cast<int>(cycle->size()) == n) return cycle;
            // Open the cycle at a vertex with a neighbour off the cycle.
            bool opened = false;
            for (std::size_t i = 0; i < cycle->size() && !opened; ++i) {
                Bitset out = r.neighbours((*cycle)[i]);
                out.subtract(on_path);
                if (!out.any()) continue;
                VertexList next;
                for (std::size_t j = 1; j <= cycle->size(); ++j) next.push_back((*cycle)[(i + j) % cycle->size()]);
                const Vertex extra = out.to_list().front();
                next.push_back(extra);
                on_path.set(extra);
                path = next;
                opened = true;
            }
            if (!opened) return std::nullopt;  // disconnected
            continue;
        }
        // Pósa rotation at the tail: pick the pivot whose new endpoint has the
        // most neighbours off the path, then the most on it.
        const Vertex tail = path.back();
        std::size_t best = path.size();
        long best_score = -1;
        for (std::size_t i = 0; i + 2 < path.size(); ++i) {
            if (!r.has_edge(path[i], tail)) continue;
            const Vertex end = path[i + 1];
            Bitset off = r.neighbours(end);
            off.subtract(on_path);
            long score = static_cast<long>(off.count()) * n + ((step + static_cast<long>(i)) % n);
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        if (best == path.size()) {
            if (tail_stuck) return std::nullopt;
            tail_stuck = true;
            std::reverse(path.begin(), path.end());
            continue;
        }
        tail_stuck = false;
        std::reverse(path.begin() + static_cast<long>(best + 1), path.end());
    }
    return std::nullopt;
}

}  // namespace blowup
