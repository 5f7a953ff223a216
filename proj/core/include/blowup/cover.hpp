#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/biclique.hpp"
#include "blowup/structures.hpp"

namespace blowup {

/// Parameters of the cover and cycle pipeline. With L = ln n:
///   m1 = ⌊c1 L⌋   cluster size of the almost cover,
///   m2 = ⌊c2 L⌋   cluster size of rooted pickups,
///   m3 = c3 L     target size of the pieces of the final quasi families,
///   m' = ⌊c L⌋    connector cluster size, winding count ℓ = ⌊c3/c⌋
/// so the cycle certificate is declared with (c, 4η).
struct CoverParams {
    double eps = 0.25;
    int s = 4;
    double eta = 0.25;
    double alpha = 0.05;
    /// Lower-regularity slack of the tiling; 0 means η/2.
    double rho = 0.0;
    double c = 0.35;
    double c1 = 1.33;
    double c2 = 0.76;
    double c3 = 0.46;
    int n_floor = 50;

    /// Number of blocks the tiling cuts the vertex set into.
    int tiling_blocks = 20;
    int tiling_rounds = 4;
    int tiling_density_trials = 200;
    int regularity_trials = 300;
    int pattern_samples = 4000;
    int blowup_restarts = 8;
    int rooted_samples = 2000;
    int pickup_attempts = 4;
    std::uint64_t biclique_budget = kDefaultBicliqueBudget;
    std::uint64_t seed = 0;

    /// "desk" (tuned near n = 300) or "small" (n around 100).
    static CoverParams preset(const std::string& name);

    void validate() const;
    double rho_value() const { return rho > 0.0 ? rho : eta / 2.0; }
    int m1(int n) const;
    int m2(int n) const;
    double m3(int n) const;
    int m_conn(int n) const;
    /// ℓ = ⌊c3 / c⌋, at least 1.
    int ell() const;
    /// Admissible piece sizes ⌈(1-η)m3⌉ .. ⌊(1+η)m3⌋.
    std::pair<int, int> piece_window(int n) const;
};

enum class CoverKind { Almost, Simple };

struct CoverTelemetry {
    int tiling_rounds = 0;
    int tiling_tuples = 0;
    std::size_t tiling_covered = 0;
    std::string tiling_stall;
    int framed_blowups = 0;
    /// (cluster size, count) for the unframed extraction sweep.
    std::vector<std::pair<int, int>> sweep_blowups;
    std::size_t almost_uncovered = 0;
    int rooted_pickups = 0;
    int rooted_rejections = 0;
    int vertex_pickups = 0;
    int insertions = 0;
    int families = 0;
    std::vector<std::string> diagnostics;
};

struct CoverResult {
    CoverKind kind = CoverKind::Almost;
    std::vector<Blowup> blowups;
    VertexList uncovered;
    CoverTelemetry telemetry;
};

/// Blow-ups of s-vertex graphs R with δ(R) ≥ (1/2+ε/2)s covering all but a
/// few vertices: tiling of the inheritance hypergraph, framed extraction per
/// regular tuple, then an unframed sweep over the remainder. Every blow-up
/// is m1-balanced.
CoverResult almost_blowup_cover(const Graph& g, const CoverParams& params);

/// Partition of V(g) into quasi (1±η)m3-balanced blow-ups of s-vertex graphs
/// R with δ(R) ≥ (1/2+ε/2)s. Vertices that could not be placed are reported
/// in `uncovered` together with a diagnostic.
CoverResult simple_blowup_cover(const Graph& g, const CoverParams& params);

/// Largest number of quasi families with pieces in [lo, hi] that a blow-up
/// with these cluster sizes splits into exactly; 0 when impossible.
int quasi_split_count(const std::vector<int>& sizes, int lo, int hi);

/// Splits a blow-up into quasi families: every family takes one singleton
/// from one cluster and one piece (size in [lo, hi]) from every other one.
/// Returns nullopt when the sizes do not allow an exact split.
std::optional<std::vector<Blowup>> split_quasi(const Blowup& b, int lo, int hi, Balance balance);

/// Checks the SIMPLE cover invariants: exact partition of V(g), hosted
/// blow-ups, declared quasi balance and δ(R) ≥ (1/2+ε/2)s.
Verdict verify_simple_cover(const Graph& g, const CoverResult& cover, const CoverParams& params);

}  // namespace blowup
