#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blowup/regular.hpp"

namespace blowup {

struct Tiling {
    std::vector<RegularTuple> tuples;

    std::size_t covered() const;
    bool disjoint(int n) const;
};

/// Schedules for the tiling loop. Round i uses d_i = (μ/16)/2^i,
/// ε_i = d_i/2, γ_i = max(exp(-ε_i^{-2s}), γ_floor) and block size m_i.
struct TilingParams {
    int s = 3;
    double eta = 0.2;
    double rho = 0.45;
    double mu = 0.4;
    double gamma_floor = 0.05;
    int m0 = 4;
    double m_shrink = 1.0;
    int m_min = 1;
    /// 0 means ⌈η^{-2}⌉.
    int max_rounds = 0;
    std::vector<double> d_override;
    std::vector<double> gamma_override;
    /// Random partite samples per block-tuple density; 0 evaluates exactly.
    int density_trials = 0;
    std::uint64_t max_reduced_candidates = 200'000;
    RegularityCheck check;
    std::uint64_t seed = 0;

    void validate() const;
    int rounds() const;
    double d(int round) const;
    double eps(int round) const;
    double gamma(int round) const;
    int m(int round) const;
    /// Reduced-graph edge threshold 4ν with ν = μ/16.
    double reduced_threshold() const { return mu / 4.0; }
};

struct IncrementTelemetry {
    int block_size = 0;
    int blocks = 0;
    int reduced_edges = 0;
    /// δ₁(R) / C(blocks-1, s-1).
    double reduced_min_degree_ratio = 0.0;
    bool perfect_matching = false;
    int matched = 0;
    int fresh = 0;
    int recycled = 0;
    std::size_t covered_before = 0;
    std::size_t covered_after = 0;
};

/// One round: cut the uncovered vertices into m-blocks, join s blocks in a
/// reduced s-graph when their partite density reaches 4ν, match the reduced
/// graph and find a lower-regular tuple inside every matched block tuple.
/// Existing tuples are kept. Throws "increment stalled" when nothing is added.
Tiling tiling_increment(const Hypergraph& p, const Tiling& q1, const TilingParams& params, int round = 0,
                        IncrementTelemetry* telemetry = nullptr);

struct TilingRound {
    int round = 0;
    double d = 0.0;
    double eps = 0.0;
    double gamma = 0.0;
    int m = 0;
    double covered_fraction = 0.0;
    IncrementTelemetry increment;
    std::string stall;
};

struct TilingResult {
    Tiling tiling;
    std::vector<TilingRound> rounds;
    std::optional<std::string> stall;
};

/// Iterates tiling_increment until at most ηn vertices remain uncovered or the
/// round cap is reached. A stall ends the loop and is reported, not thrown.
TilingResult almost_perfect_tiling(const Hypergraph& p, const TilingParams& params);

}  // namespace blowup
