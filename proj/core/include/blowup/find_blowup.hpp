#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/biclique.hpp"
#include "blowup/structures.hpp"

namespace blowup {

inline constexpr int kDefaultRestarts = 50;

struct BlowupSearchOptions {
    /// Pattern vertex i must receive a cluster inside frame part i.
    std::optional<std::vector<VertexList>> frame;
    /// Vertices the search may use; all vertices when unset.
    std::optional<Bitset> allowed;
    int restarts = kDefaultRestarts;
    std::uint64_t biclique_budget = kDefaultBicliqueBudget;
    /// Node budget of the exhaustive fallback run after all restarts fail;
    /// zero disables it.
    std::uint64_t exhaustive_budget = 200'000;
    std::uint64_t seed = 0;
};

/// Finds a blow-up of `pattern` with every cluster of size t.
std::optional<Blowup> find_blowup(const Graph& host, const Graph& pattern, int t,
                                  const BlowupSearchOptions& options = {});

/// As find_blowup, with an individual size per pattern vertex.
std::optional<Blowup> find_blowup_sized(const Graph& host, const Graph& pattern, const std::vector<int>& sizes,
                                        const BlowupSearchOptions& options = {});

}  // namespace blowup
