#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

enum class CountMode { Exact, Sampled };

/// Counts labelled copies (injective edge-preserving maps) of a pattern graph.
/// With a frame, pattern vertex i must map into frame part i.
struct CopyCounter {
    Graph pattern;
    std::optional<std::vector<VertexList>> frame;
    CountMode mode = CountMode::Exact;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 0;
};

inline constexpr double kExactCountBudget = 1e8;

/// EXACT: the number of labelled copies; requires at most 8 pattern vertices
/// and a search space (product of candidate pool sizes) of at most 1e8.
/// SAMPLED: hit fraction of uniform maps times the size of the map space.
double count_copies(const CopyCounter& cc, const Graph& host);

}  // namespace blowup
