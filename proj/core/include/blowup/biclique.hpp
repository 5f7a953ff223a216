#pragma once

#include <cstdint>
#include <optional>

#include "blowup/graph.hpp"

namespace blowup {

inline constexpr std::uint64_t kDefaultBicliqueBudget = 1'000'000;
inline constexpr std::uint64_t kUnlimitedBudget = ~std::uint64_t{0};

struct BicliqueRequest {
    const Graph* host = nullptr;
    VertexList side_a;
    VertexList side_b;
    int p = 1;
    std::uint64_t budget = kDefaultBicliqueBudget;
    /// Permit side_a and side_b to share vertices; the sides found are still
    /// disjoint because the host has no loops.
    bool allow_overlap = false;
};

struct Biclique {
    VertexList a;
    VertexList b;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

/// Looks for p-sets A' ⊆ side_a, B' ⊆ side_b with K(A', B') ⊆ host.
///
/// Branches on the side whose members have the larger cross degree, in order of
/// descending cross degree (ties by ascending id), keeping the common
/// neighbourhood of the chosen vertices on the other side. A branch is cut as
/// soon as fewer than p common neighbours remain or fewer than the missing
/// number of branch vertices still have p neighbours in it. The search is
/// exhaustive, so with an unlimited budget std::nullopt proves absence.
std::optional<Biclique> find_biclique(const BicliqueRequest& req, SearchStats* stats = nullptr);

}  // namespace blowup
