#include <doctest.h>

#include <sstream>

#include "blowup/error.hpp"
#include "blowup/graph.hpp"
#include "blowup/hypergraph.hpp"
#include "blowup/io.hpp"
#include "blowup/rng.hpp"
#include "blowup/structures.hpp"

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

Graph c4() { return Graph::cycle(4); }

}  // namespace

TEST_CASE("min_degree")
{
    CHECK(min_degree(Graph::complete(4)) == 3);
    CHECK(min_degree(Graph(5)) == 0);
    CHECK(min_degree(Graph::cycle(5)) == 2);
    CHECK_THROWS_AS(min_degree(Graph()), Error);
}

TEST_CASE("min degree at most average degree")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(12, 0.1 + 0.02 * static_cast<double>(seed), seed);
        CHECK(min_degree(g) * g.order() <= 2 * static_cast<int>(g.edge_count()));
    }
}

TEST_CASE("adjacency rows are symmetric without loops")
{
    const Graph g = random_graph(30, 0.5, 7);
    for (int u = 0; u < 30; ++u) {
        CHECK_FALSE(g.has_edge(u, u));
        CHECK(g.degree(u) == static_cast<int>(g.neighbours(u).count()));
        for (int v = 0; v < 30; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
}

TEST_CASE("is_complete_bipartite examples")
{
    CHECK(is_complete_bipartite(Graph::complete(6), {0, 1}, {2, 3}).passed());
    CHECK(is_complete_bipartite(c4(), {0}, {1, 3}).passed());
    CHECK(is_complete_bipartite(c4(), {0, 2}, {1, 3}).passed());
    const Verdict v = is_complete_bipartite(c4(), {0, 1}, {2, 3});
    CHECK(v.status == Status::Fail);
    REQUIRE(v.missing_pair);
    CHECK(*v.missing_pair == std::make_pair(Vertex{0}, Vertex{2}));
}

TEST_CASE("is_complete_bipartite agrees with edge counting")
{
    Rng rng(11);
    for (int round = 0; round < 200; ++round) {
        const Graph g = random_graph(10, rng.uniform(), rng.next());
        VertexList a, b;
        for (int v = 0; v < 10; ++v) {
            const auto side = rng.below(3);
            if (side == 0) a.push_back(v);
            if (side == 1) b.push_back(v);
        }
        if (a.empty() || b.empty()) continue;
        std::size_t cross = 0;
        for (Vertex x : a)
            for (Vertex y : b) cross += g.has_edge(x, y);
        CHECK(is_complete_bipartite(g, a, b).passed() == (cross == a.size() * b.size()));
    }
}

TEST_CASE("verify_blowup_hosted examples")
{
    Blowup b;
    b.reduced = Graph::complete(3);
    b.family.clusters = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
    CHECK(verify_blowup_hosted(Graph::complete(9), b).passed());

    Graph host(9);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (Vertex x : b.family.clusters[i])
                for (Vertex y : b.family.clusters[j]) host.add_edge(x, y);
    CHECK(verify_blowup_hosted(host, b).passed());
    host.remove_edge(1, 7);
    const Verdict v = verify_blowup_hosted(host, b);
    CHECK(v.status == Status::Fail);
    REQUIRE(v.missing_pair);
    CHECK(*v.missing_pair == std::make_pair(Vertex{1}, Vertex{7}));

    Blowup loose;
    loose.reduced = Graph(3);
    loose.family.clusters = {{0, 5}, {2}, {8, 3}};
    CHECK(verify_blowup_hosted(Graph(9), loose).passed());
}

TEST_CASE("verify_cycle_blowup examples")
{
    const Graph k12 = Graph::complete(12);
    CycleBlowupCertificate cert;
    cert.n = 12;
    cert.c = 3.0 / std::log(12.0);
    cert.eta = 0.1;
    cert.clusters = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
    CHECK(verify_cycle_blowup(k12, cert).passed());

    auto missing = cert;
    missing.clusters[3] = {9, 10};
    missing.eta = 0.4;
    const Verdict v = verify_cycle_blowup(k12, missing);
    CHECK(v.reason == "not spanning");
    REQUIRE(v.witness_sets.size() == 1);
    CHECK(v.witness_sets[0] == VertexList{11});

    auto big = cert;
    big.clusters = {{0, 1, 2, 3}, {4, 5, 6}, {7, 8}, {9, 10, 11}};
    CHECK(verify_cycle_blowup(k12, big).reason == "size out of range");
}

TEST_CASE("cycle certificate implies hosted cycle blow-up")
{
    // Complete blow-up of C5 with clusters of 2 and 3; the certificate read as a
    // cycle reduced graph must be hosted too.
    const std::vector<VertexList> clusters = {{0, 1}, {2, 3, 4}, {5, 6}, {7, 8, 9}, {10, 11}};
    Graph g(12);
    for (std::size_t i = 0; i < 5; ++i)
        for (Vertex x : clusters[i])
            for (Vertex y : clusters[(i + 1) % 5]) g.add_edge(x, y);
    CycleBlowupCertificate cert{12, 2.5 / std::log(12.0), 0.25, clusters};
    REQUIRE(verify_cycle_blowup(g, cert).passed());
    Blowup b;
    b.reduced = Graph::cycle(5);
    b.family.clusters = clusters;
    CHECK(verify_blowup_hosted(g, b).passed());

    g.remove_edge(4, 5);
    CHECK_FALSE(verify_cycle_blowup(g, cert).passed());
    CHECK_FALSE(verify_blowup_hosted(g, b).passed());
}

TEST_CASE("cluster_size_bounds uses natural log with ceil/floor")
{
    const auto [lo, hi] = cluster_size_bounds(300, 0.35, 0.25);
    const double base = 0.35 * std::log(300.0);
    CHECK(lo == static_cast<int>(std::ceil(0.75 * base)));
    CHECK(hi == static_cast<int>(std::floor(1.25 * base)));
}

TEST_CASE("set family balance descriptors")
{
    SetFamily f;
    f.clusters = {{0, 1, 2}, {3, 4, 5}};
    f.balance = Balance::exact(3);
    CHECK(f.balanced());
    f.clusters[1].pop_back();
    CHECK_FALSE(f.balanced());
    f.balance = Balance::approx(3, 0.34);
    CHECK(f.balanced());

    SetFamily q;
    q.clusters = {{0}, {1, 2, 3}, {4, 5}};
    q.balance = Balance::quasi(3, 0.34);
    CHECK(q.balanced());
    CHECK(q.singleton_index() == std::optional<std::size_t>{0});
    q.clusters.push_back({6});
    CHECK_FALSE(q.singleton_index());
    CHECK_FALSE(q.balanced());

    SetFamily overlap;
    overlap.clusters = {{0, 1}, {1, 2}};
    CHECK_FALSE(overlap.disjoint());
}

TEST_CASE("hypergraph_min_degree examples")
{
    CHECK(hypergraph_min_degree(Hypergraph::complete(5, 3)) == 6);
    CHECK(hypergraph_min_degree(Hypergraph::explicit_edges(4, 3, {{0, 1, 2}})) == 0);
    const Hypergraph fano = Hypergraph::explicit_edges(
        7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    CHECK(hypergraph_min_degree(fano) == 3);
    const Hypergraph implicit = Hypergraph::implicit(5, 3, [](std::span<const Vertex>) { return true; });
    CHECK_THROWS_WITH_AS(hypergraph_min_degree(implicit),
                         "degree requires explicit edges or use property_degree_estimate", Error);
}

TEST_CASE("hypergraph edges are validated")
{
    CHECK_THROWS_AS(Hypergraph::explicit_edges(4, 3, {{0, 1}}), Error);
    CHECK_THROWS_AS(Hypergraph::explicit_edges(4, 3, {{0, 1, 1}}), Error);
    CHECK_THROWS_AS(Hypergraph::explicit_edges(4, 3, {{0, 1, 4}}), Error);
    const auto h = Hypergraph::explicit_edges(4, 3, {{2, 1, 0}, {0, 1, 2}});
    CHECK(h.edges().size() == 1);
    CHECK(h.has_edge(std::vector<Vertex>{1, 2, 0}));
}

TEST_CASE("graph text round trip")
{
    const Graph g = random_graph(25, 0.4, 3);
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);

    std::istringstream commented("# header comment\n3 2\n0 1 # first\n\n1 2\n");
    const Graph h = read_graph(commented);
    CHECK(h.edge_count() == 2);
    std::istringstream bad("3 1\n0 3\n");
    CHECK_THROWS_AS(read_graph(bad), Error);
}

TEST_CASE("certificate and blow-up round trip")
{
    CycleBlowupCertificate cert{9, 0.5, 0.25, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};
    CHECK(parse_certificate(serialize_certificate(cert)) == cert);

    Blowup b;
    b.reduced = Graph::cycle(4);
    b.family.clusters = {{0}, {1, 2}, {3, 4}, {5, 6, 7}};
    b.family.balance = Balance::quasi(2, 0.5);
    const Blowup back = parse_blowup(serialize_blowup(b));
    CHECK(back == b);
    CHECK(back.family.balance.kind == BalanceKind::Quasi);

    CHECK_THROWS_AS(parse_certificate("{\"n\": 3}"), Error);
}

TEST_CASE("hypergraph text round trip")
{
    const auto h = Hypergraph::explicit_edges(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 2, 4}});
    std::stringstream ss;
    write_hypergraph(ss, h);
    const Hypergraph back = read_hypergraph(ss);
    CHECK(back.edges() == h.edges());
    CHECK(back.uniformity() == 3);
}
