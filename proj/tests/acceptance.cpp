// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/biclique.hpp"
#include "blowup/connect.hpp"
#include "blowup/cover.hpp"
#include "blowup/cycle.hpp"
#include "blowup/generate.hpp"
#include "blowup/inheritance.hpp"
#include "blowup/io.hpp"
#include "blowup/matching.hpp"
#include "blowup/regular.hpp"
#include "blowup/rng.hpp"
#include "blowup/sweep.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {

// Pinned thresholds.
constexpr double kVerifierSeconds = 1.0;
constexpr int kE2eRuns = 20, kE2eRequired = 18;
constexpr double kE2eSecondsPerRun = 120.0;
constexpr int kConnectRuns = 100, kConnectRequired = 95, kConnectOracleRuns = 50;
constexpr int kBicliquePerDecile = 1200;
constexpr double kBicliqueSeconds = 60.0;
constexpr int kMatchingInstances = 50;
constexpr int kRegularInstances = 30;
constexpr int kInheritGraphs = 10, kInheritTrials = 5000;
constexpr double kInheritSigmas = 3.0;
constexpr double kHoeffdingRelTol = 1e-12;
constexpr int kHoeffdingDraws = 1'000'000;
constexpr int kCoverRuns = 10;

struct Outcome {
    bool pass = false;
    std::string detail;
    // Byte-level record of every artifact the run produced.
    std::string transcript;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph gnp_instance(int n, double frac, std::uint64_t seed, double p = 0.8)
{
    GeneratorSpec spec;
    spec.n = n;
    spec.p = p;
    spec.delta_target = static_cast<int>(std::ceil(frac * n - 1e-9));
    spec.seed = seed;
    return generate(spec);
}

Graph random_graph(int n, double p, Rng& rng)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

VertexList range(int from, int to)
{
    VertexList out;
    for (int v = from; v < to; ++v) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------- 1

enum class Flaw { None, Spanning, Completeness, Size, Disjointness };

struct CorpusItem {
    Graph host;
    CycleBlowupCertificate cert;
    Flaw flaw;
};

CorpusItem make_certificate(Flaw flaw, std::uint64_t seed)
{
    Rng rng(seed);
    const int k = 4 + static_cast<int>(rng.below(5));
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(3 + static_cast<int>(rng.below(2)));
    if (flaw == Flaw::Size) sizes[rng.below(static_cast<std::uint64_t>(k))] = rng.bernoulli(0.5) ? 5 : 2;
    if (flaw == Flaw::Spanning || flaw == Flaw::Disjointness) sizes[0] = 4;
    if (flaw == Flaw::Disjointness) sizes[2] = 3;
    int n = 0;
    for (int s : sizes) n += s;

    VertexList labels = range(0, n);
    rng.shuffle(labels);
    std::vector<VertexList> clusters;
    int next = 0;
    for (int s : sizes) {
        clusters.push_back(VertexList(labels.begin() + next, labels.begin() + next + s));
        next += s;
    }
    Graph host(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(0.3)) host.add_edge(u, v);
    for (int i = 0; i < k; ++i)
        for (Vertex x : clusters[i])
            for (Vertex y : clusters[(i + 1) % k]) host.add_edge(x, y);

    // Bounds [3, 4]: c ln n = 3.5 with eta = 0.15.
    CycleBlowupCertificate cert{n, 3.5 / std::log(static_cast<double>(n)), 0.15, clusters};
    switch (flaw) {
    case Flaw::None:
    case Flaw::Size: break;
    case Flaw::Spanning: cert.clusters[0].pop_back(); break;
    case Flaw::Completeness: {
        const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        host.remove_edge(clusters[i][0], clusters[(i + 1) % k].back());
        break;
    }
    case Flaw::Disjointness: {
        const Vertex v = cert.clusters[0].back();
        cert.clusters[2].push_back(v);
        for (Vertex y : clusters[1]) host.add_edge(v, y);
        for (Vertex y : clusters[3]) host.add_edge(v, y);
        break;
    }
    }
    return {host, cert, flaw};
}

std::string expected_reason(Flaw f)
{
    switch (f) {
    case Flaw::None: return "";
    case Flaw::Spanning: return "not spanning";
    case Flaw::Completeness: return "consecutive clusters not completely joined";
    case Flaw::Size: return "size out of range";
    case Flaw::Disjointness: return "clusters not disjoint";
    }
    return "";
}

Outcome criterion1()
{
    std::vector<CorpusItem> corpus;
    std::uint64_t seed = 1000;
    for (Flaw f : {Flaw::None, Flaw::Spanning, Flaw::Completeness, Flaw::Size, Flaw::Disjointness})
        for (int i = 0; i < 10; ++i) corpus.push_back(make_certificate(f, seed++));
    // Independent sanity on the corpus itself: valid items really are cycle blow-ups.
    for (const auto& item : corpus)
        if (item.flaw == Flaw::None)
            for (std::size_t i = 0; i < item.cert.clusters.size(); ++i)
                if (!oracle::complete_between(item.host, item.cert.clusters[i],
                                              item.cert.clusters[(i + 1) % item.cert.clusters.size()]))
                    return {false, "corpus construction error", ""};

    const auto t0 = std::chrono::steady_clock::now();
    int correct = 0;
    for (const auto& item : corpus) {
        const Verdict v = verify_cycle_blowup(item.host, item.cert);
        const bool ok = item.flaw == Flaw::None ? v.passed() : (!v.passed() && v.reason == expected_reason(item.flaw));
        correct += ok;
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << correct << "/" << corpus.size() << " classified, " << secs * 1000 << " ms";
    return {correct == static_cast<int>(corpus.size()) && secs < kVerifierSeconds, d.str(), ""};
}

// ---------------------------------------------------------------- 2

Outcome criterion2()
{
    int passed = 0;
    double slowest = 0;
    bool all_reverified = true;
    std::ostringstream transcript;
    for (int seed = 0; seed < kE2eRuns; ++seed) {
        const Graph g = gnp_instance(300, 0.75, static_cast<std::uint64_t>(seed));
        CoverParams params = CoverParams::preset("desk");
        params.seed = static_cast<std::uint64_t>(seed);
        const auto t0 = std::chrono::steady_clock::now();
        const CycleOutcome out = spanning_cycle_blowup(g, params);
        const double secs = seconds_since(t0);
        slowest = std::max(slowest, secs);
        if (out.passed()) {
            const bool ok = verify_cycle_blowup(g, *out.certificate).passed();
            all_reverified = all_reverified && ok;
            if (ok && secs < kE2eSecondsPerRun) ++passed;
            transcript << serialize_certificate(*out.certificate);
        } else {
            transcript << "FAILURE " << out.failure->stage << '\n';
        }
        write_stage_csv(transcript, out.telemetry);
    }
    std::ostringstream d;
    d << passed << "/" << kE2eRuns << " PASS-verified, slowest run " << slowest << " s";
    return {passed >= kE2eRequired && all_reverified && slowest < kE2eSecondsPerRun, d.str(), transcript.str()};
}

// ---------------------------------------------------------------- 3

Outcome criterion3()
{
    int successes = 0;
    bool sound = true;
    std::ostringstream transcript;
    for (int seed = 0; seed < kConnectRuns; ++seed) {
        const Graph g = gnp_instance(80, 0.75, static_cast<std::uint64_t>(seed));
        Rng rng(mix_seed(3, static_cast<std::uint64_t>(seed)));
        VertexList all = range(0, 80);
        rng.shuffle(all);
        const VertexList u(all.begin(), all.begin() + 12), v(all.begin() + 12, all.begin() + 24),
            w(all.begin() + 24, all.end());
        const auto c = connect_clusters(g, u, v, w, 2);
        if (c) {
            const bool ok = is_complete_bipartite(g, c->u, c->w).passed() &&
                            is_complete_bipartite(g, c->v, c->w).passed() &&
                            oracle::complete_between(g, c->u, c->w) && oracle::complete_between(g, c->v, c->w);
            sound = sound && ok;
            successes += ok;
            transcript << seed;
            for (const auto* side : {&c->u, &c->v, &c->w})
                for (Vertex x : *side) transcript << ' ' << x;
            transcript << '\n';
        } else {
            transcript << seed << " NONE\n";
        }
    }

    int agree = 0, exist = 0;
    for (int seed = 0; seed < kConnectOracleRuns; ++seed) {
        Rng rng(mix_seed(33, static_cast<std::uint64_t>(seed)));
        const Graph g = random_graph(20, 0.25 + 0.5 * static_cast<double>(seed) / kConnectOracleRuns, rng);
        ConnectOptions opts;
        opts.budget = kUnlimitedBudget;
        const auto c = connect_clusters(g, range(0, 4), range(4, 8), range(8, 20), 2, opts);
        const bool truth = oracle::connection_exists(g, range(0, 4), range(4, 8), range(8, 20), 2);
        agree += (c.has_value() == truth);
        exist += truth;
    }
    std::ostringstream d;
    d << successes << "/" << kConnectRuns << " connected, oracle agreement " << agree << "/" << kConnectOracleRuns
      << " (" << exist << " with a triple)";
    return {successes >= kConnectRequired && sound && agree == kConnectOracleRuns, d.str(), transcript.str()};
}

// ---------------------------------------------------------------- 4

Outcome criterion4()
{
    const auto t0 = std::chrono::steady_clock::now();
    int graphs = 0, agree = 0, present = 0;
    for (int decile = 0; decile < 10; ++decile) {
        Rng rng(mix_seed(4, static_cast<std::uint64_t>(decile)));
        for (int i = 0; i < kBicliquePerDecile; ++i) {
            const double p = (decile + rng.uniform()) / 10.0;
            const Graph g = random_graph(8, p, rng);
            VertexList all = range(0, 8);
            rng.shuffle(all);
            const VertexList a(all.begin(), all.begin() + 4), b(all.begin() + 4, all.end());
            ++graphs;
            bool ok = true;
            const auto split = find_biclique({&g, a, b, 2, kUnlimitedBudget});
            const bool split_truth = oracle::biclique_exists(g, a, b, 2);
            ok = ok && split.has_value() == split_truth;
            if (split) ok = ok && oracle::complete_between(g, split->a, split->b);
            BicliqueRequest whole{&g, range(0, 8), range(0, 8), 2, kUnlimitedBudget, true};
            const auto any = find_biclique(whole);
            const bool any_truth = oracle::biclique_exists(g, range(0, 8), range(0, 8), 2);
            ok = ok && any.has_value() == any_truth;
            if (any) ok = ok && oracle::complete_between(g, any->a, any->b);
            agree += ok;
            present += any_truth;
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << agree << "/" << graphs << " graphs agree (" << present << " contain C4), " << secs << " s";
    return {agree == graphs && secs < kBicliqueSeconds, d.str(), ""};
}

// ---------------------------------------------------------------- 5

Outcome criterion5()
{
    const int n = 12;
    const double threshold = (2.0 / 3.0 + 0.1) * oracle::binom(n - 1, 2);
    int instances = 0, agree = 0, valid = 0, drawn = 0;
    for (std::uint64_t seed = 0; instances < kMatchingInstances; ++seed) {
        Rng rng(mix_seed(5, seed));
        std::vector<VertexList> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (rng.bernoulli(0.9)) edges.push_back({a, b, c});
        ++drawn;
        const Hypergraph h = Hypergraph::explicit_edges(n, 3, edges);
        if (hypergraph_min_degree(h) < threshold) continue;
        ++instances;
        MatchingOptions opts;
        opts.seed = seed;
        const auto m = hypergraph_perfect_matching(h, 3, opts);
        agree += (m.has_value() == oracle::perfect_matching_exists(h));
        if (m) {
            // Disjoint host edges covering every vertex, checked by hand.
            std::vector<int> hits(n, 0);
            bool ok = m->edges.size() == static_cast<std::size_t>(n / 3);
            for (const auto& e : m->edges) {
                ok = ok && h.has_edge(e);
                for (Vertex v : e) ++hits[v];
            }
            for (int x : hits) ok = ok && x == 1;
            valid += ok;
        }
    }
    std::ostringstream d;
    d << "existence agrees " << agree << "/" << instances << ", valid " << valid << "/" << instances << " ("
      << drawn << " draws for " << instances << " above threshold)";
    return {agree == instances && valid == instances, d.str(), ""};
}

// ---------------------------------------------------------------- 6

Outcome criterion6()
{
    int successes = 0, recertified = 0, iterations = 0, monotone = 0;
    for (int seed = 0; seed < kRegularInstances; ++seed) {
        Rng rng(mix_seed(6, static_cast<std::uint64_t>(seed)));
        // Odd seeds plant a sparse half in V_1 so the density increment has work to do.
        const bool planted = seed % 2 == 1;
        const double p = planted ? 1.0 : 0.55 + 0.4 * rng.uniform();
        std::vector<VertexList> edges;
        for (int a = 0; a < 12; ++a)
            for (int b = 12; b < 24; ++b)
                for (int c = 24; c < 36; ++c)
                    if (rng.bernoulli(planted && a < 6 ? 0.1 : p)) edges.push_back({a, b, c});
        const Hypergraph h = Hypergraph::explicit_edges(36, 3, edges);
        const std::vector<VertexList> parts{range(0, 12), range(12, 24), range(24, 36)};
        if (tuple_density(h, parts) < 0.5) return {false, "instance below density 0.5", ""};
        RegularityCheck how;
        how.seed = static_cast<std::uint64_t>(seed);
        RegularTupleTelemetry tel;
        const auto t = find_lower_regular_tuple(h, parts, 0.45, 0.5, how, &tel);
        for (const auto& it : tel.iterations) {
            if (!it.selected_density) continue;
            ++iterations;
            monotone += *it.selected_density >= it.density - 1e-12;
        }
        if (!t) continue;
        ++successes;
        RegularityCheck exhaustive;
        exhaustive.mode = RegularityMode::Exhaustive;
        recertified += check_lower_regular(h, t->parts, 0.45, 0.5, exhaustive).passed();
    }
    std::ostringstream d;
    d << successes << "/" << kRegularInstances << " found, " << recertified << " re-certified exhaustively, "
      << monotone << "/" << iterations << " increments non-decreasing";
    return {successes > 0 && recertified == successes && monotone == iterations, d.str(), ""};
}

// ---------------------------------------------------------------- 7

Outcome criterion7()
{
    int vertices = 0, within = 0;
    double worst = 0;
    for (int seed = 0; seed < kInheritGraphs; ++seed) {
        const Graph g = gnp_instance(14, 0.75, static_cast<std::uint64_t>(seed));
        const PropertySpec spec(g, 5, 0.4);
        for (Vertex v = 0; v < 14; ++v) {
            const double exact = oracle::inheriting_fraction(g, v, 5, 0.4);
            const auto est = property_degree_estimate(spec, v, kInheritTrials, mix_seed(7, static_cast<std::uint64_t>(seed)));
            const double se = std::sqrt(exact * (1 - exact) / kInheritTrials);
            const double dev = std::abs(est.estimate - exact);
            ++vertices;
            if (se == 0) {
                within += dev == 0;
            } else {
                within += dev <= kInheritSigmas * se;
                worst = std::max(worst, dev / se);
            }
        }
    }
    const Graph k20 = Graph::complete(20);
    bool complete_exact = true;
    for (Vertex v = 0; v < 20; ++v) complete_exact = complete_exact && oracle::inheriting_fraction(k20, v, 5, 0.4) == 1.0;
    std::ostringstream d;
    d << within << "/" << vertices << " vertices within " << kInheritSigmas << " SE (worst " << worst
      << " SE), K20 fraction exactly 1: " << (complete_exact ? "yes" : "no");
    return {within == vertices && complete_exact, d.str(), ""};
}

// ---------------------------------------------------------------- 8

Outcome criterion8()
{
    const double bound = hypergeometric_tail_bound(10, 5);
    const double expect = 2.0 * std::exp(-5.0);
    const bool formula = std::abs(bound - expect) <= kHoeffdingRelTol * expect;

    std::mt19937_64 eng(8);
    std::vector<int> urn(100);
    for (int i = 0; i < 100; ++i) urn[i] = i < 50;
    std::vector<long> tail(6, 0);
    for (int draw = 0; draw < kHoeffdingDraws; ++draw) {
        int x = 0;
        for (int i = 0; i < 10; ++i) {
            std::uniform_int_distribution<int> pick(i, 99);
            std::swap(urn[i], urn[pick(eng)]);
            x += urn[i];
        }
        const int dev = std::abs(x - 5);
        for (int l = 1; l <= dev; ++l) ++tail[l];
    }
    bool empirical = true;
    std::ostringstream d;
    d.precision(12);
    d << "bound(10,5) = " << bound << " vs 2e^-5 = " << expect;
    d.precision(4);
    for (int l : {3, 4, 5}) {
        const double freq = static_cast<double>(tail[l]) / kHoeffdingDraws;
        const double b = hypergeometric_tail_bound(10, l);
        empirical = empirical && freq <= b;
        d << "; P(|X-5|>=" << l << ") = " << freq << " <= " << b;
    }
    return {formula && empirical, d.str(), ""};
}

// ---------------------------------------------------------------- 9

bool quasi_ok(const SetFamily& f)
{
    const Balance& b = f.balance;
    if (b.kind != BalanceKind::Quasi) return false;
    int singles = 0;
    for (const auto& c : f.clusters) {
        if (c.size() == 1) {
            ++singles;
            continue;
        }
        const double s = static_cast<double>(c.size());
        if (s < (1 - b.eta) * b.m - 1e-9 || s > (1 + b.eta) * b.m + 1e-9) return false;
    }
    return singles == 1;
}

Outcome criterion9()
{
    int good = 0;
    std::ostringstream transcript;
    std::string first_problem;
    for (int seed = 0; seed < kCoverRuns; ++seed) {
        const Graph g = gnp_instance(200, 0.75, static_cast<std::uint64_t>(seed));
        CoverParams params = CoverParams::preset("desk");
        params.seed = static_cast<std::uint64_t>(seed);
        const CoverResult res = simple_blowup_cover(g, params);
        std::string problem;
        std::vector<int> seen(200, 0);
        std::size_t total = 0;
        for (const auto& b : res.blowups) {
            transcript << serialize_blowup(b);
            for (const auto& c : b.family.clusters) {
                total += c.size();
                for (Vertex v : c) ++seen[v];
            }
            if (!quasi_ok(b.family)) problem = "family not quasi-balanced";
            if (b.reduced.order() != params.s || min_degree(b.reduced) < (0.5 + params.eps / 2) * params.s)
                problem = "reduced graph degree";
            for (auto [x, y] : b.reduced.edges())
                if (!oracle::complete_between(g, b.family.clusters[x], b.family.clusters[y])) problem = "not hosted";
        }
        for (int s : seen)
            if (s != 1) problem = "not an exact partition";
        if (total != 200) problem = "sizes do not sum to n";
        if (!res.uncovered.empty()) problem = "uncovered vertices";
        if (!verify_simple_cover(g, res, params).passed()) problem = "verify_simple_cover rejected";
        if (problem.empty()) ++good;
        else if (first_problem.empty()) first_problem = "seed " + std::to_string(seed) + ": " + problem;
    }
    std::ostringstream d;
    d << good << "/" << kCoverRuns << " covers satisfy the invariant suite";
    if (!first_problem.empty()) d << " (" << first_problem << ")";
    return {good == kCoverRuns, d.str(), transcript.str()};
}

// ---------------------------------------------------------------- 10

Outcome criterion10(const Outcome& c2, const Outcome& c3, const Outcome& c9)
{
    const Outcome r2 = criterion2(), r3 = criterion3(), r9 = criterion9();
    SweepSpec spec;
    spec.ns = {100, 120};
    spec.seeds = {0, 1};
    spec.preset = "small";
    std::ostringstream a, b;
    write_sweep_csv(a, sweep(spec), false);
    spec.threads = 1;
    write_sweep_csv(b, sweep(spec), false);
    const bool same2 = r2.transcript == c2.transcript, same3 = r3.transcript == c3.transcript,
               same9 = r9.transcript == c9.transcript, same_csv = a.str() == b.str();
    std::ostringstream d;
    d << "certificates+telemetry " << (same2 ? "identical" : "DIFFER") << ", connections "
      << (same3 ? "identical" : "DIFFER") << ", covers " << (same9 ? "identical" : "DIFFER") << ", sweep CSV "
      << (same_csv ? "identical" : "DIFFER") << " (" << c2.transcript.size() + c3.transcript.size() + c9.transcript.size()
      << " bytes compared)";
    return {same2 && same3 && same9 && same_csv, d.str(), ""};
}

}  // namespace

int main()
{
    int failures = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), ""};
        }
        failures += !o.pass;
        std::printf("criterion %2d %s  %s: %s [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        return o;
    };
    report(1, "verifier soundness", criterion1);
    const Outcome c2 = report(2, "end-to-end probe", criterion2);
    const Outcome c3 = report(3, "connecting lemma", criterion3);
    report(4, "biclique oracle", criterion4);
    report(5, "hypergraph matching", criterion5);
    report(6, "regular tuples", criterion6);
    report(7, "degree inheritance", criterion7);
    report(8, "Hoeffding bound", criterion8);
    const Outcome c9 = report(9, "cover invariants", criterion9);
    report(10, "determinism", [&] { return criterion10(c2, c3, c9); });
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
