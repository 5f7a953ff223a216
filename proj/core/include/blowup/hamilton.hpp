#pragma once

#include <optional>

#include "blowup/graph.hpp"

namespace blowup {

/// Hamilton cycle by path extension, Pósa rotations and the crossing-pair
/// closure. Guaranteed when δ(R) ≥ v(R)/2; otherwise a cycle may still be
/// found. Throws for fewer than 3 vertices.
std::optional<VertexList> dirac_hamilton_cycle(const Graph& r);

/// True iff `cycle` visits every vertex of r once and consecutive vertices
/// (cyclically) are adjacent.
bool is_hamilton_cycle(const Graph& r, const VertexList& cycle);

}  // namespace blowup
