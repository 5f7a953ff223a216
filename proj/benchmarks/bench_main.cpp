#include <benchmark/benchmark.h>

#include <cmath>

#include "blowup/biclique.hpp"
#include "blowup/connect.hpp"
#include "blowup/cover.hpp"
#include "blowup/cycle.hpp"
#include "blowup/find_blowup.hpp"
#include "blowup/generate.hpp"
#include "blowup/inheritance.hpp"
#include "blowup/regular.hpp"
#include "blowup/rng.hpp"

using namespace blowup;

namespace {

Graph instance(int n, std::uint64_t seed = 1)
{
    GeneratorSpec spec;
    spec.n = n;
    spec.p = 0.8;
    spec.delta_target = static_cast<int>(std::ceil(0.75 * n));
    spec.seed = seed;
    return generate(spec);
}

VertexList range(int from, int to)
{
    VertexList out;
    for (int v = from; v < to; ++v) out.push_back(v);
    return out;
}

}  // namespace

static void BM_Biclique(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Graph g = instance(n);
    const int p = static_cast<int>(std::log(n));
    for (auto _ : state) {
        auto r = find_biclique({&g, range(0, n / 2), range(n / 2, n), p});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Biclique)->Arg(100)->Arg(300)->Arg(1000);

static void BM_Connect(benchmark::State& state)
{
    const Graph g = instance(80);
    for (auto _ : state) {
        auto r = connect_clusters(g, range(0, 12), range(12, 24), range(24, 80), 2);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Connect);

static void BM_FindBlowupK4(benchmark::State& state)
{
    const Graph g = instance(300);
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = find_blowup(g, Graph::complete(4), t);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FindBlowupK4)->Arg(3)->Arg(5)->Arg(7);

static void BM_InheritanceEstimate(benchmark::State& state)
{
    const Graph g = instance(300);
    const PropertySpec spec(g, 4, 0.25);
    for (auto _ : state) benchmark::DoNotOptimize(property_degree_estimate(spec, 0, 10000, 3));
}
BENCHMARK(BM_InheritanceEstimate);

static void BM_ExhaustiveRegularity(benchmark::State& state)
{
    const int size = static_cast<int>(state.range(0));
    Rng rng(6);
    std::vector<VertexList> edges;
    for (int a = 0; a < size; ++a)
        for (int b = size; b < 2 * size; ++b)
            for (int c = 2 * size; c < 3 * size; ++c)
                if (rng.bernoulli(0.8)) edges.push_back({a, b, c});
    const Hypergraph h = Hypergraph::explicit_edges(3 * size, 3, edges);
    const std::vector<VertexList> parts{range(0, size), range(size, 2 * size), range(2 * size, 3 * size)};
    RegularityCheck how;
    how.mode = RegularityMode::Exhaustive;
    for (auto _ : state) benchmark::DoNotOptimize(check_lower_regular(h, parts, 0.45, 0.5, how));
}
BENCHMARK(BM_ExhaustiveRegularity)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SimpleCover(benchmark::State& state)
{
    const Graph g = instance(static_cast<int>(state.range(0)));
    const CoverParams params = CoverParams::preset("desk");
    for (auto _ : state) benchmark::DoNotOptimize(simple_blowup_cover(g, params));
}
BENCHMARK(BM_SimpleCover)->Arg(200)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_Pipeline(benchmark::State& state)
{
    const Graph g = instance(static_cast<int>(state.range(0)));
    const CoverParams params = CoverParams::preset("desk");
    for (auto _ : state) benchmark::DoNotOptimize(spanning_cycle_blowup(g, params));
}
BENCHMARK(BM_Pipeline)->Arg(300)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
