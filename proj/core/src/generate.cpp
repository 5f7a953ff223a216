#include "blowup/generate.hpp"

#include <algorithm>

#include "blowup/error.hpp"
#include "blowup/io.hpp"
#include "blowup/rng.hpp"

namespace blowup {

GeneratorKind parse_generator_kind(const std::string& name)
{
    if (name == "gnp") return GeneratorKind::GnpRepaired;
    if (name == "extremal") return GeneratorKind::DiracExtremal;
    if (name == "cliques") return GeneratorKind::CliqueUnionPlus;
    if (name == "file") return GeneratorKind::FromFile;
    throw Error("unknown generator kind " + name);
}

void repair_min_degree(Graph& g, int target)
{
    const int n = g.order();
    if (target > n - 1) throw Error("infeasible minimum degree target");
    while (true) {
        Vertex low = -1;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) < target && (low < 0 || g.degree(v) < g.degree(low))) low = v;
        if (low < 0) return;
        for (Vertex u = 0; u < n && g.degree(low) < target; ++u)
            if (u != low && !g.has_edge(low, u)) g.add_edge(low, u);
    }
}

namespace {

Graph gnp(int n, double p, std::uint64_t seed)
{
    Graph g(n);
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph extremal(int n, int delta_target, int d)
{
    const int half_floor = n / 2, half_ceil = n - n / 2;
    if (d < 0) d = std::max(0, delta_target - half_floor + 1);
    if (half_floor + d > n) throw Error("extremal overlap too large");
    Graph g(n);
    // Clique A on [0, ceil+d), clique B on [ceil-d, n); they share 2d vertices.
    const int a_end = std::min(n, half_ceil + d);
    const int b_begin = std::max(0, half_ceil - d);
    for (Vertex u = 0; u < a_end; ++u)
        for (Vertex v = u + 1; v < a_end; ++v) g.add_edge(u, v);
    for (Vertex u = b_begin; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph clique_union(int n, int parts, int part_size)
{
    if (parts < 1 || part_size < 1) throw Error("block shape must be positive");
    Graph g(n);
    const int block = parts * part_size;
    for (int start = 0; start < n; start += block) {
        const int end = std::min(n, start + block);
        for (Vertex u = start; u < end; ++u)
            for (Vertex v = u + 1; v < end; ++v)
                if ((u - start) / part_size != (v - start) / part_size) g.add_edge(u, v);
    }
    return g;
}

}  // namespace

Graph generate(const GeneratorSpec& spec)
{
    Graph g;
    if (spec.kind == GeneratorKind::FromFile) {
        g = load_graph(spec.path);
    } else {
        if (spec.n < 3) throw Error("generator needs n >= 3");
        if (spec.delta_target < 0 || spec.delta_target > spec.n - 1) throw Error("infeasible minimum degree target");
        switch (spec.kind) {
        case GeneratorKind::GnpRepaired: g = gnp(spec.n, spec.p, spec.seed); break;
        case GeneratorKind::DiracExtremal: g = extremal(spec.n, spec.delta_target, spec.d); break;
        case GeneratorKind::CliqueUnionPlus: g = clique_union(spec.n, spec.parts, spec.part_size); break;
        case GeneratorKind::FromFile: break;
        }
        if (spec.kind != GeneratorKind::DiracExtremal) repair_min_degree(g, spec.delta_target);
    }
    if (g.order() > 0 && min_degree(g) < spec.delta_target)
        throw Error("generated graph misses the minimum degree target");
    return g;
}

}  // namespace blowup
