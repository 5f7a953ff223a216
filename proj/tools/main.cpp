#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blowup/biclique.hpp"
#include "blowup/connect.hpp"
#include "blowup/cover.hpp"
#include "blowup/cycle.hpp"
#include "blowup/error.hpp"
#include "blowup/generate.hpp"
#include "blowup/inheritance.hpp"
#include "blowup/io.hpp"
#include "blowup/matching.hpp"
#include "blowup/sweep.hpp"
#include "blowup/tiling.hpp"

using namespace blowup;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string preset = "desk";
    std::uint64_t budget = kDefaultBicliqueBudget;
    std::string out;
};

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw Error("cannot write " + path);
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

// "0,3,5-9" style vertex lists.
VertexList parse_vertices(const std::string& text)
{
    VertexList out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto dash = tok.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(static_cast<Vertex>(std::stoul(tok)));
            } else {
                const auto a = std::stoul(tok.substr(0, dash));
                const auto b = std::stoul(tok.substr(dash + 1));
                for (auto v = a; v <= b; ++v) out.push_back(static_cast<Vertex>(v));
            }
        } catch (const std::logic_error&) {
            throw Error("bad vertex list: " + text);
        }
    }
    return out;
}

std::string join(const VertexList& vs)
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s;
}

VertexList all_vertices(const Graph& g, const Bitset* skip = nullptr)
{
    VertexList out;
    for (int v = 0; v < g.order(); ++v)
        if (!skip || !skip->test(static_cast<std::size_t>(v))) out.push_back(static_cast<Vertex>(v));
    return out;
}

CoverParams preset_params(const Globals& gl)
{
    CoverParams p = CoverParams::preset(gl.preset);
    p.seed = gl.seed;
    p.biclique_budget = gl.budget;
    return p;
}

std::vector<VertexList> property_edges(const Graph& g, int s, double eps)
{
    const PropertySpec spec(g, s, eps);
    std::vector<VertexList> edges;
    const int n = g.order();
    if (binomial(n, s) > 5e6) throw Error("property hypergraph too large to list; use --hypergraph");
    VertexList cur(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) cur[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
    while (true) {
        if (inherits_degree(spec, cur)) edges.push_back(cur);
        int i = s - 1;
        while (i >= 0 && static_cast<int>(cur[static_cast<std::size_t>(i)]) == n - s + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < s; ++k) cur[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k - 1)] + 1;
    }
    return edges;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spanning cycle blow-ups in Dirac graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_option("--seed", gl.seed, "Random seed")->capture_default_str();
    app.add_option("--preset", gl.preset, "Parameter preset (desk, small)")->capture_default_str();
    app.add_option("--budget", gl.budget, "Search node budget")->capture_default_str();
    app.add_option("--out", gl.out, "Output file (stdout when omitted)");

    int rc = 0;

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a graph instance");
    GeneratorSpec gs;
    std::string kind = "gnp";
    double delta_frac = 0.75;
    gen->add_option("--kind", kind, "gnp | extremal | cliques | file")->capture_default_str();
    gen->add_option("-n", gs.n, "Order")->required();
    gen->add_option("--p", gs.p, "Edge probability")->capture_default_str();
    gen->add_option("--delta", gs.delta_target, "Minimum degree target (overrides --delta-frac)");
    gen->add_option("--delta-frac", delta_frac, "Minimum degree target as a fraction of n")->capture_default_str();
    gen->add_option("--d", gs.d, "Overlap half-width for dirac");
    gen->add_option("--parts", gs.parts)->capture_default_str();
    gen->add_option("--part-size", gs.part_size)->capture_default_str();
    gen->add_option("--path", gs.path, "Input for kind=file");
    gen->callback([&] {
        gs.kind = parse_generator_kind(kind);
        gs.seed = gl.seed;
        if (gs.delta_target <= 0) gs.delta_target = static_cast<int>(std::ceil(delta_frac * gs.n - 1e-9));
        Sink sink(gl.out);
        write_graph(sink.os(), generate(gs));
    });

    // solve
    auto* solve = app.add_subcommand("solve", "Find a spanning cycle blow-up");
    std::string graph_path, telemetry_path;
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--telemetry", telemetry_path, "Stage telemetry CSV");
    solve->callback([&] {
        const Graph g = load_graph(graph_path);
        const CycleOutcome outcome = spanning_cycle_blowup(g, preset_params(gl));
        if (!telemetry_path.empty()) {
            std::ofstream t(telemetry_path);
            if (!t) throw Error("cannot write " + telemetry_path);
            write_stage_csv(t, outcome.telemetry);
        }
        if (outcome.passed()) {
            Sink sink(gl.out);
            sink.os() << serialize_certificate(*outcome.certificate);
            std::cerr << "PASS clusters=" << outcome.certificate->clusters.size() << '\n';
        } else {
            std::cerr << "FAILURE stage=" << outcome.failure->stage << " iteration=" << outcome.failure->iteration
                      << ": " << outcome.failure->summary << '\n';
            rc = 2;
        }
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
    std::string cert_path;
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--cert", cert_path)->required();
    verify->callback([&] {
        const Graph g = load_graph(graph_path);
        const Verdict v = verify_cycle_blowup(g, load_certificate(cert_path));
        Sink sink(gl.out);
        sink.os() << to_string(v.status);
        if (!v.reason.empty()) sink.os() << ": " << v.reason;
        sink.os() << '\n';
        if (!v.passed()) rc = 2;
    });

    // cover
    auto* cover = app.add_subcommand("cover", "Blow-up cover (one JSON blow-up per line)");
    bool almost = false;
    cover->add_option("--graph", graph_path)->required();
    cover->add_flag("--almost", almost, "Almost cover instead of the simple partition");
    cover->callback([&] {
        const Graph g = load_graph(graph_path);
        const CoverParams params = preset_params(gl);
        const CoverResult res = almost ? almost_blowup_cover(g, params) : simple_blowup_cover(g, params);
        Sink sink(gl.out);
        for (const auto& b : res.blowups) sink.os() << serialize_blowup(b);
        std::cerr << res.blowups.size() << " blow-ups, " << res.uncovered.size() << " uncovered\n";
        for (const auto& d : res.telemetry.diagnostics) std::cerr << d << '\n';
        if (!almost) {
            const Verdict v = verify_simple_cover(g, res, params);
            std::cerr << "invariants: " << to_string(v.status) << (v.reason.empty() ? "" : " " + v.reason) << '\n';
            if (!v.passed()) rc = 2;
        }
    });

    // connect
    auto* conn = app.add_subcommand("connect", "Connect two clusters through the rest of the graph");
    std::string u_text, v_text, w_text;
    int m_prime = 2;
    conn->add_option("--graph", graph_path)->required();
    conn->add_option("--U", u_text, "Vertex list, e.g. 0-11")->required();
    conn->add_option("--V", v_text)->required();
    conn->add_option("--W", w_text, "Defaults to everything outside U and V");
    conn->add_option("--m", m_prime, "Connector cluster size")->capture_default_str();
    conn->callback([&] {
        const Graph g = load_graph(graph_path);
        const VertexList u = parse_vertices(u_text), v = parse_vertices(v_text);
        VertexList w;
        if (w_text.empty()) {
            Bitset taken = g.empty_set();
            for (auto x : u) taken.set(x);
            for (auto x : v) taken.set(x);
            w = all_vertices(g, &taken);
        } else {
            w = parse_vertices(w_text);
        }
        ConnectOptions opts;
        opts.budget = gl.budget;
        ConnectTelemetry tel;
        const auto c = connect_clusters(g, u, v, w, m_prime, opts, &tel);
        Sink sink(gl.out);
        if (c) {
            sink.os() << "U' " << join(c->u) << "\nV' " << join(c->v) << "\nW' " << join(c->w) << '\n';
        } else {
            sink.os() << "NONE" << (tel.budget_exhausted ? " (budget exhausted)" : "") << '\n';
            rc = 2;
        }
        std::cerr << "W_U=" << tel.w_u << " W_V=" << tel.w_v << " W*=" << tel.w_star << " nodes=" << tel.nodes << '\n';
    });

    // biclique
    auto* bic = app.add_subcommand("biclique", "Search for K(p, p) between two vertex sets");
    std::string a_text, b_text;
    int p = 2;
    bic->add_option("--graph", graph_path)->required();
    bic->add_option("--a", a_text, "Side A (all vertices when omitted)");
    bic->add_option("--b", b_text, "Side B (all vertices when omitted)");
    bic->add_option("--p", p)->capture_default_str();
    bic->callback([&] {
        const Graph g = load_graph(graph_path);
        BicliqueRequest req;
        req.host = &g;
        req.side_a = a_text.empty() ? all_vertices(g) : parse_vertices(a_text);
        req.side_b = b_text.empty() ? all_vertices(g) : parse_vertices(b_text);
        req.allow_overlap = a_text.empty() || b_text.empty();
        req.p = p;
        req.budget = gl.budget;
        SearchStats stats;
        const auto res = find_biclique(req, &stats);
        Sink sink(gl.out);
        if (res) {
            sink.os() << "A " << join(res->a) << "\nB " << join(res->b) << '\n';
        } else {
            sink.os() << (stats.budget_exhausted ? "UNKNOWN (budget exhausted)" : "NONE") << '\n';
            rc = 2;
        }
    });

    // tile
    auto* tile = app.add_subcommand("tile", "Almost perfect tiling by lower-regular tuples");
    std::string hyper_path;
    TilingParams tp;
    double eps = 0.25;
    tile->add_option("--graph", graph_path, "Host graph; tiles its inheritance hypergraph");
    tile->add_option("--hypergraph", hyper_path, "Explicit s-graph file");
    tile->add_option("--s", tp.s)->capture_default_str();
    tile->add_option("--eps", eps, "Inheritance slack")->capture_default_str();
    tile->add_option("--eta", tp.eta)->capture_default_str();
    tile->add_option("--mu", tp.mu)->capture_default_str();
    tile->add_option("--m0", tp.m0, "Initial block size")->capture_default_str();
    tile->add_option("--rounds", tp.max_rounds, "Round cap (0 = ceil(eta^-2))")->capture_default_str();
    tile->add_option("--density-trials", tp.density_trials)->capture_default_str();
    tile->callback([&] {
        tp.seed = gl.seed;
        tp.check.seed = gl.seed;
        std::optional<Graph> g;
        std::optional<Hypergraph> h;
        if (!hyper_path.empty()) {
            h = load_hypergraph(hyper_path);
            tp.s = h->uniformity();
        } else if (!graph_path.empty()) {
            g = load_graph(graph_path);
            h = property_hypergraph(PropertySpec(*g, tp.s, eps));
        } else {
            throw Error("tile needs --graph or --hypergraph");
        }
        const TilingResult res = almost_perfect_tiling(*h, tp);
        Sink sink(gl.out);
        auto& os = sink.os();
        os << "# schema=" << kCsvSchema << '\n';
        os << "round,d,eps,gamma,m,blocks,reduced_edges,perfect_matching,matched,fresh,covered_fraction,stall\n";
        for (const auto& r : res.rounds)
            os << r.round << ',' << r.d << ',' << r.eps << ',' << r.gamma << ',' << r.m << ',' << r.increment.blocks
               << ',' << r.increment.reduced_edges << ',' << r.increment.perfect_matching << ','
               << r.increment.matched << ',' << r.increment.fresh << ',' << r.covered_fraction << ','
               << csv_field(r.stall) << '\n';
        std::cerr << res.tiling.tuples.size() << " tuples covering " << res.tiling.covered() << " of " << h->order()
                  << " vertices\n";
    });

    // match
    auto* match = app.add_subcommand("match", "Perfect matching of an s-graph");
    int ms = 3;
    double match_eps = 0.1;
    match->add_option("--hypergraph", hyper_path, "Explicit s-graph file");
    match->add_option("--graph", graph_path, "Host graph; matches its inheritance hypergraph");
    match->add_option("--s", ms)->capture_default_str();
    match->add_option("--eps", eps, "Inheritance slack for --graph")->capture_default_str();
    match->add_option("--slack", match_eps, "Partition threshold slack")->capture_default_str();
    match->callback([&] {
        std::optional<Hypergraph> h;
        if (!hyper_path.empty()) {
            h = load_hypergraph(hyper_path);
        } else if (!graph_path.empty()) {
            const Graph g = load_graph(graph_path);
            h = Hypergraph::explicit_edges(g.order(), ms, property_edges(g, ms, eps));
        } else {
            throw Error("match needs --graph or --hypergraph");
        }
        MatchingOptions mo;
        mo.eps = match_eps;
        mo.seed = gl.seed;
        mo.exchange_budget = gl.budget;
        MatchingTelemetry tel;
        const auto m = hypergraph_perfect_matching(*h, h->uniformity(), mo, &tel);
        Sink sink(gl.out);
        if (m) {
            for (const auto& e : m->edges) sink.os() << join(e) << '\n';
        } else {
            sink.os() << "NONE\n";
            rc = 2;
        }
        std::cerr << "# schema=" << kCsvSchema << "\npartitions_tried,below_threshold,dummy_initial,exchanges,nodes\n"
                  << tel.partitions_tried << ',' << tel.partitions_below_threshold << ',' << tel.dummy_edges_initial
                  << ',' << tel.exchanges << ',' << tel.exchange_nodes << '\n';
    });

    // inherit-scan
    auto* scan = app.add_subcommand("inherit-scan", "Per-vertex inheritance degree estimates");
    int scan_s = 4;
    std::uint64_t trials = 5000;
    scan->add_option("--graph", graph_path)->required();
    scan->add_option("--s", scan_s)->capture_default_str();
    scan->add_option("--eps", eps)->capture_default_str();
    scan->add_option("--trials", trials)->capture_default_str();
    scan->callback([&] {
        const Graph g = load_graph(graph_path);
        const PropertySpec spec(g, scan_s, eps);
        Sink sink(gl.out);
        auto& os = sink.os();
        os << "# schema=" << kCsvSchema << "\nvertex,estimate,trials,seed\n";
        for (int v = 0; v < g.order(); ++v) {
            const auto e = property_degree_estimate(spec, static_cast<Vertex>(v), trials, gl.seed);
            os << v << ',' << e.estimate << ',' << e.trials << ',' << e.seed << '\n';
        }
    });

    // sweep
    auto* sw = app.add_subcommand("sweep", "Run the pipeline over a grid of n and seeds");
    std::vector<int> ns;
    int seed_count = 1;
    std::string sweep_kind = "gnp";
    SweepSpec spec;
    bool no_wall = false;
    sw->add_option("--n", ns, "Orders, e.g. --n 100 200 400 or --n 100,200")->required()->delimiter(',');
    sw->add_option("--seeds", seed_count, "Seeds --seed .. --seed+count-1")->capture_default_str();
    sw->add_option("--kind", sweep_kind, "gnp | extremal | cliques | complete")->capture_default_str();
    sw->add_option("--p", spec.generator.p)->capture_default_str();
    sw->add_option("--delta-frac", spec.delta_fraction)->capture_default_str();
    sw->add_option("--threads", spec.threads, "Workers (0 = hardware)")->capture_default_str();
    sw->add_flag("--no-wall", no_wall, "Omit the wall time column");
    sw->callback([&] {
        spec.ns = ns;
        for (int i = 0; i < seed_count; ++i) spec.seeds.push_back(gl.seed + static_cast<std::uint64_t>(i));
        spec.preset = gl.preset;
        if (sweep_kind == "complete") {
            spec.generator.kind = GeneratorKind::GnpRepaired;
            spec.generator.p = 1.0;
        } else {
            spec.generator.kind = parse_generator_kind(sweep_kind);
        }
        const auto rows = sweep(spec);
        Sink sink(gl.out);
        write_sweep_csv(sink.os(), rows, !no_wall);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
