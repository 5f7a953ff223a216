#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/cover.hpp"
#include "blowup/structures.hpp"

namespace blowup {

struct AbsorbedBlowup {
    /// Reduced graph R - v* (minus the edges at the merge target that v*
    /// does not have) with V* merged into the target cluster.
    Blowup blowup;
    /// Hamilton cycle c_0 .. c_{k-1} of R - v*, in its own vertex ids.
    VertexList cycle;
    /// c_j and c_{j+2} are neighbours of v*; V* joins c_{j+1}.
    int j = 0;
    Vertex target = 0;
};

/// Merges the singleton cluster into a cluster whose two cycle neighbours are
/// both adjacent to v*, so the Hamilton cycle survives in the blow-up. Among
/// the valid j the smallest target cluster is chosen (then the smallest j).
AbsorbedBlowup absorb_singleton(const Blowup& b);

/// A blow-up of a cycle after absorption, with connector vertices removed.
/// clusters[0] is the head (it lost the previous connector's W2), the last
/// cluster is the tail (it lost W1).
struct WindingPiece {
    std::vector<VertexList> clusters;
};

/// Connector from the tail of piece `from` to the head of piece `to`:
/// K(w1, w3) and K(w3, w2) are complete, w1 came out of the tail cluster and
/// w2 out of the head cluster.
struct Connector {
    std::size_t from = 0;
    std::size_t to = 0;
    VertexList w1;
    VertexList w3;
    VertexList w2;
};

/// Splits each cluster into ℓ near-equal parts and winds ℓ times around every
/// piece: W2, then ℓ passes over positions 1..k-1, 0, then W1 and W3.
CycleBlowupCertificate subdivide_and_wind(const std::vector<WindingPiece>& pieces,
                                          const std::vector<Connector>& connectors, int ell, int n, double c,
                                          double eta);

/// Near-equal split of a sorted cluster into ℓ parts, larger parts first.
std::vector<VertexList> subdivide(const VertexList& cluster, int ell);

struct StageRow {
    std::string stage;
    int index = 0;
    std::string metric;
    double value = 0.0;
};

struct CycleFailure {
    std::string stage;
    int iteration = 0;
    std::string summary;
};

struct CycleOutcome {
    std::optional<CycleBlowupCertificate> certificate;
    std::optional<CycleFailure> failure;
    std::vector<StageRow> telemetry;

    bool passed() const { return certificate.has_value(); }
};

/// Full pipeline: simple cover, absorption, connection loop, winding. Every
/// returned certificate has passed verify_cycle_blowup.
CycleOutcome spanning_cycle_blowup(const Graph& g, const CoverParams& params);

}  // namespace blowup
