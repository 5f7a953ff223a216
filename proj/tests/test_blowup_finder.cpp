#include <doctest.h>

#include <cmath>

#include "blowup/biclique.hpp"
#include "blowup/connect.hpp"
#include "blowup/copies.hpp"
#include "blowup/error.hpp"
#include "blowup/find_blowup.hpp"
#include "blowup/generate.hpp"
#include "blowup/rng.hpp"
#include "blowup/rooted.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph dense(int n, double frac, std::uint64_t seed)
{
    GeneratorSpec spec;
    spec.n = n;
    spec.p = 0.8;
    spec.delta_target = static_cast<int>(std::ceil(frac * n));
    spec.seed = seed;
    return generate(spec);
}

VertexList range(int from, int to)
{
    VertexList out;
    for (int v = from; v < to; ++v) out.push_back(v);
    return out;
}

Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int x = 0; x < a; ++x)
        for (int y = a; y < a + b; ++y) g.add_edge(x, y);
    return g;
}

Graph path3()
{
    Graph p(3);
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    return p;
}

}  // namespace

TEST_CASE("find_biclique examples")
{
    const Graph k10 = Graph::complete(10);
    BicliqueRequest req{&k10, range(0, 5), range(5, 10), 3};
    const auto b = find_biclique(req);
    REQUIRE(b);
    CHECK(b->a.size() == 3);
    CHECK(b->b.size() == 3);
    CHECK(is_complete_bipartite(k10, b->a, b->b).passed());

    const Graph c6 = Graph::cycle(6);
    SearchStats stats;
    CHECK_FALSE(find_biclique({&c6, {0, 2, 4}, {1, 3, 5}, 2, kUnlimitedBudget}, &stats));
    CHECK_FALSE(stats.budget_exhausted);

    Graph k33 = complete_bipartite(3, 3);
    k33.remove_edge(0, 3);
    const auto r = find_biclique({&k33, {0, 1, 2}, {3, 4, 5}, 2});
    REQUIRE(r);
    CHECK(is_complete_bipartite(k33, r->a, r->b).passed());
}

TEST_CASE("find_biclique agrees with brute force on small graphs")
{
    Rng rng(5);
    for (int round = 0; round < 600; ++round) {
        const int n = 6 + static_cast<int>(rng.below(5));
        const Graph g = random_graph(n, rng.uniform(), rng.next());
        VertexList all = range(0, n);
        rng.shuffle(all);
        const int cut = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 3)));
        VertexList a(all.begin(), all.begin() + cut), b(all.begin() + cut, all.end());
        for (int p : {1, 2}) {
            SearchStats stats;
            const auto res = find_biclique({&g, a, b, p, kUnlimitedBudget}, &stats);
            CHECK(res.has_value() == oracle::biclique_exists(g, a, b, p));
            if (res) CHECK(is_complete_bipartite(g, res->a, res->b).passed());
        }
    }
}

TEST_CASE("find_biclique respects the budget")
{
    const Graph g = random_graph(40, 0.5, 1);
    SearchStats stats;
    const auto r = find_biclique({&g, range(0, 20), range(20, 40), 6, 10}, &stats);
    if (!r) CHECK(stats.budget_exhausted);
    CHECK_FALSE(find_biclique({&g, range(0, 3), range(3, 6), 4}));
}

TEST_CASE("count_copies examples")
{
    const Graph k2 = Graph::complete(2);
    CHECK(count_copies({k2}, Graph::complete(4)) == 12);
    CHECK(count_copies({Graph::complete(3)}, Graph::complete(4)) == 24);
    CHECK(count_copies({k2}, Graph(6)) == 0);
}

TEST_CASE("count_copies on vertex-transitive hosts matches closed forms")
{
    for (int n = 3; n <= 9; ++n) {
        const Graph cyc = Graph::cycle(n);
        CHECK(count_copies({Graph::complete(2)}, cyc) == 2.0 * n);
        CHECK(count_copies({Graph::complete(3)}, cyc) == (n == 3 ? 6.0 : 0.0));
        const Graph k = Graph::complete(n);
        CHECK(count_copies({Graph::complete(3)}, k) == static_cast<double>(n) * (n - 1) * (n - 2));
    }
    CopyCounter sampled{Graph::complete(2), std::nullopt, CountMode::Sampled, 20000, 3};
    CHECK(count_copies(sampled, Graph::complete(8)) == doctest::Approx(56.0).epsilon(0.02));
}

TEST_CASE("find_blowup examples")
{
    const Graph k12 = Graph::complete(12);
    const auto b = find_blowup(k12, Graph::complete(3), 4);
    REQUIRE(b);
    CHECK(b->family.clusters.size() == 3);
    for (const auto& c : b->family.clusters) CHECK(c.size() == 4);
    CHECK(verify_blowup_hosted(k12, *b).passed());

    Graph k444(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            if (u / 4 != v / 4) k444.add_edge(u, v);
    BlowupSearchOptions framed;
    framed.frame = std::vector<VertexList>{range(0, 4), range(4, 8), range(8, 12)};
    const auto f = find_blowup(k444, Graph::complete(3), 4, framed);
    REQUIRE(f);
    CHECK(f->family.clusters[0] == range(0, 4));
    CHECK(f->family.clusters[1] == range(4, 8));
    CHECK(f->family.clusters[2] == range(8, 12));

    const Graph g = random_graph(60, 0.9, 2);
    const auto p = find_blowup(g, path3(), 3);
    REQUIRE(p);
    CHECK(verify_blowup_hosted(g, *p).passed());
}

TEST_CASE("find_blowup existence matches exhaustive search at n = 18")
{
    Rng rng(12);
    int found = 0, absent = 0;
    for (int round = 0; round < 40; ++round) {
        const double p = 0.1 + 0.3 * rng.uniform();
        const Graph g = random_graph(18, p, rng.next());
        BlowupSearchOptions opts;
        opts.exhaustive_budget = ~std::uint64_t{0};
        opts.biclique_budget = kUnlimitedBudget;
        opts.seed = static_cast<std::uint64_t>(round);
        const auto b = find_blowup(g, path3(), 2, opts);
        CHECK(b.has_value() == oracle::blowup_exists(g, path3(), 2));
        if (b) {
            CHECK(verify_blowup_hosted(g, *b).passed());
            ++found;
        } else {
            ++absent;
        }
    }
    CHECK(found > 0);
    CHECK(absent > 0);
}

TEST_CASE("find_blowup is deterministic")
{
    const Graph g = random_graph(50, 0.7, 9);
    BlowupSearchOptions opts;
    opts.seed = 4;
    CHECK(find_blowup(g, Graph::complete(4), 3, opts) == find_blowup(g, Graph::complete(4), 3, opts));
}

TEST_CASE("connect_clusters examples")
{
    const Graph k30 = Graph::complete(30);
    const auto c = connect_clusters(k30, range(0, 10), range(10, 20), range(20, 30), 3);
    REQUIRE(c);
    CHECK(c->u.size() == 3);
    CHECK(c->w.size() == 3);
    CHECK(is_complete_bipartite(k30, c->u, c->w).passed());
    CHECK(is_complete_bipartite(k30, c->v, c->w).passed());

    const Graph kb = complete_bipartite(15, 15);
    const auto d = connect_clusters(kb, range(0, 5), range(5, 10), range(15, 30), 2);
    REQUIRE(d);
    CHECK(is_complete_bipartite(kb, d->u, d->w).passed());
    CHECK(is_complete_bipartite(kb, d->v, d->w).passed());

    CHECK_THROWS_WITH_AS(connect_clusters(k30, range(0, 4), range(4, 10), range(10, 30), 2),
                         "unbalanced connection request", Error);
}

TEST_CASE("connect_clusters on dense random graphs")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = dense(80, 0.75, seed);
        Rng rng(seed);
        VertexList all = range(0, 80);
        rng.shuffle(all);
        const VertexList u(all.begin(), all.begin() + 12), v(all.begin() + 12, all.begin() + 24),
            w(all.begin() + 24, all.end());
        ConnectTelemetry tel;
        const auto c = connect_clusters(g, u, v, w, 2, {}, &tel);
        REQUIRE(c);
        CHECK(is_complete_bipartite(g, c->u, c->w).passed());
        CHECK(is_complete_bipartite(g, c->v, c->w).passed());
        CHECK(tel.working_order == 80);
        CHECK(tel.w_u >= (0.5 + 0.25 / 2) * (80 - 24));
        CHECK(tel.w_v >= (0.5 + 0.25 / 2) * (80 - 24));
    }
}

TEST_CASE("connect_clusters agrees with the exhaustive triple search")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_graph(20, 0.3 + 0.02 * static_cast<double>(seed), seed + 100);
        ConnectOptions opts;
        opts.budget = kUnlimitedBudget;
        const auto c = connect_clusters(g, range(0, 4), range(4, 8), range(8, 20), 2, opts);
        CHECK(c.has_value() == oracle::connection_exists(g, range(0, 4), range(4, 8), range(8, 20), 2));
    }
}

TEST_CASE("rooted_blowup examples")
{
    const Graph k30 = Graph::complete(30);
    const VertexList root = {3, 7, 11, 19, 23, 28};
    const auto r = rooted_blowup(k30, root, 4, 0.25, 2);
    REQUIRE(r);
    const auto& b = r->blowup;
    CHECK(b.reduced == Graph::complete(4));
    CHECK(b.family.clusters[r->root].size() == 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (Vertex v : b.family.clusters[i]) {
            const bool inside = std::find(root.begin(), root.end(), v) != root.end();
            CHECK(inside == (i == r->root));
        }
    CHECK(verify_blowup_hosted(k30, b).passed());

    Graph hollow = k30;
    for (Vertex x : root)
        for (Vertex y : root)
            if (x < y) hollow.remove_edge(x, y);
    const auto h = rooted_blowup(hollow, root, 4, 0.25, 2);
    REQUIRE(h);
    CHECK(h->blowup.reduced == Graph::complete(4));
    CHECK(verify_blowup_hosted(hollow, h->blowup).passed());

    CHECK_THROWS_AS(rooted_blowup(k30, {1, 2}, 4, 0.25, 3), Error);
    CHECK_THROWS_AS(rooted_blowup(k30, root, 2, 0.25, 2), Error);
}

TEST_CASE("rooted_blowup on a dense random graph")
{
    const Graph g = dense(60, 0.8, 6);
    const auto r = rooted_blowup(g, range(0, 10), 4, 0.25, 2);
    REQUIRE(r);
    CHECK(verify_blowup_hosted(g, r->blowup).passed());
    CHECK(min_degree(r->blowup.reduced) >= 3);
}

TEST_CASE("single-vertex root gives a singleton cluster")
{
    const Graph g = dense(40, 0.8, 1);
    const auto r = rooted_blowup(g, {5}, 4, 0.25, 2);
    REQUIRE(r);
    CHECK(r->blowup.family.clusters[r->root] == VertexList{5});
    CHECK(verify_blowup_hosted(g, r->blowup).passed());
}

TEST_CASE("rooted_blowup existence matches exhaustive search at n = 16")
{
    Rng rng(8);
    int agree = 0;
    for (int round = 0; round < 12; ++round) {
        const Graph g = random_graph(16, 0.55 + 0.35 * rng.uniform(), rng.next());
        VertexList all = range(0, 16);
        rng.shuffle(all);
        const VertexList root(all.begin(), all.begin() + 4);
        RootedOptions opts;
        opts.seed = static_cast<std::uint64_t>(round);
        opts.exhaustive_budget = ~std::uint64_t{0};
        opts.biclique_budget = kUnlimitedBudget;
        const auto r = rooted_blowup(g, root, 4, 0.25, 2, opts);
        const bool exists = oracle::rooted_k4_exists(g, root, 2);
        if (r) {
            CHECK(exists);
            CHECK(verify_blowup_hosted(g, r->blowup).passed());
        }
        agree += (r.has_value() == exists);
    }
    CHECK(agree == 12);
}
