#include "blowup/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <ostream>
#include <thread>

#include "blowup/error.hpp"

namespace blowup {

ExperimentRow run_cell(const GeneratorSpec& gen, const CoverParams& params, const std::string& preset)
{
    ExperimentRow row;
    row.n = gen.n;
    row.seed = gen.seed;
    row.preset = preset;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Graph g = generate(gen);
        CoverParams p = params;
        p.seed = gen.seed;
        const CycleOutcome out = spanning_cycle_blowup(g, p);
        if (out.passed()) {
            const auto& cl = out.certificate->clusters;
            row.passed = true;
            row.stage = "done";
            row.clusters = static_cast<int>(cl.size());
            row.size_min = static_cast<int>(cl.front().size());
            for (const auto& c : cl) {
                row.size_min = std::min(row.size_min, static_cast<int>(c.size()));
                row.size_max = std::max(row.size_max, static_cast<int>(c.size()));
            }
            row.c_effective = row.size_max / std::log(static_cast<double>(row.n));
        } else if (out.failure) {
            row.stage = out.failure->stage;
            row.detail = out.failure->summary;
        }
    } catch (const std::exception& e) {
        row.stage = "error";
        row.detail = e.what();
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<ExperimentRow> sweep(const SweepSpec& spec)
{
    if (spec.ns.empty() || spec.seeds.empty()) throw Error("nonempty ranges");
    const CoverParams params = CoverParams::preset(spec.preset);

    std::vector<int> ns = spec.ns;
    std::vector<std::uint64_t> seeds = spec.seeds;
    std::sort(ns.begin(), ns.end());
    std::sort(seeds.begin(), seeds.end());

    std::vector<GeneratorSpec> cells;
    for (int n : ns)
        for (auto seed : seeds) {
            GeneratorSpec g = spec.generator;
            g.n = n;
            g.seed = seed;
            if (g.delta_target <= 0) g.delta_target = static_cast<int>(std::ceil(spec.delta_fraction * n - 1e-9));
            cells.push_back(g);
        }

    std::vector<ExperimentRow> rows(cells.size());
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) rows[i] = run_cell(cells[i], params, spec.preset);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    return rows;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch == '\n' ? ' ' : ch;
    }
    return out + "\"";
}

namespace {

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool include_wall)
{
    out << "# schema=" << kCsvSchema << '\n';
    out << "n,seed,preset,outcome,stage,clusters,size_min,size_max,c_effective,detail";
    if (include_wall) out << ",wall_ms";
    out << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.seed << ',' << csv_field(r.preset) << ',' << (r.passed ? "PASS" : "FAILURE") << ','
            << csv_field(r.stage) << ',' << r.clusters << ',' << r.size_min << ',' << r.size_max << ','
            << fixed(r.c_effective, 6) << ',' << csv_field(r.detail);
        if (include_wall) out << ',' << fixed(r.wall_ms, 1);
        out << '\n';
    }
}

void write_stage_csv(std::ostream& out, const std::vector<StageRow>& rows)
{
    out << "# schema=" << kCsvSchema << '\n';
    out << "stage,index,metric,value\n";
    for (const auto& r : rows)
        out << csv_field(r.stage) << ',' << r.index << ',' << csv_field(r.metric) << ',' << fixed(r.value, 6) << '\n';
}

}  // namespace blowup
