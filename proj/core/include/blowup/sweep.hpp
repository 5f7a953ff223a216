#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "blowup/cycle.hpp"
#include "blowup/generate.hpp"

namespace blowup {

struct ExperimentRow {
    int n = 0;
    std::uint64_t seed = 0;
    std::string preset;
    bool passed = false;
    /// Failing stage, or "done" on PASS.
    std::string stage;
    std::string detail;
    int clusters = 0;
    int size_min = 0;
    int size_max = 0;
    /// size_max / ln n on PASS rows, 0 otherwise.
    double c_effective = 0.0;
    double wall_ms = 0.0;
};

struct SweepSpec {
    std::vector<int> ns;
    std::vector<std::uint64_t> seeds;
    std::string preset = "desk";
    /// Instance template; n and seed are filled per cell. delta_target <= 0
    /// means ⌈delta_fraction · n⌉.
    GeneratorSpec generator;
    double delta_fraction = 0.75;
    /// 0 picks hardware concurrency.
    unsigned threads = 0;
};

/// One spanning_cycle_blowup run per (n, seed); rows come back sorted by
/// (n, seed). Generator and pipeline errors become FAILURE rows.
std::vector<ExperimentRow> sweep(const SweepSpec& spec);

ExperimentRow run_cell(const GeneratorSpec& gen, const CoverParams& params, const std::string& preset);

inline constexpr int kCsvSchema = 1;

/// "# schema=1" comment line, header, rows. wall_ms is the last column and
/// is left out entirely when include_wall is false.
void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool include_wall = true);

/// stage,index,metric,value
void write_stage_csv(std::ostream& out, const std::vector<StageRow>& rows);

/// Double-quotes a field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace blowup
