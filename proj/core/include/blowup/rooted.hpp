#pragma once

#include <cstdint>
#include <optional>

#include "blowup/find_blowup.hpp"
#include "blowup/structures.hpp"

namespace blowup {

struct RootedOptions {
    /// Vertices outside the root set that the blow-up may use; all when unset.
    std::optional<Bitset> allowed;
    int samples = 4000;
    int restarts = 6;
    /// The blow-up of R' is searched with clusters of copies_factor·t
    /// vertices (shrinking towards t when that fails).
    int copies_factor = 2;
    std::uint64_t biclique_budget = kDefaultBicliqueBudget;
    /// After the auxiliary-graph route fails, search R directly with the root
    /// position framed inside the root set.
    bool direct_fallback = true;
    /// Node budget for the exhaustive stage of the direct search; zero skips it.
    std::uint64_t exhaustive_budget = 0;
    std::uint64_t seed = 0;
};

struct RootedBlowup {
    Blowup blowup;
    /// Index of the cluster contained in the root set.
    std::size_t root = 0;
    /// Number of sampled partite s-sets that carried the chosen reduced graph.
    int support = 0;
    bool via_fallback = false;
};

/// Blow-up T(W) with |T| = s and δ(T) ≥ (1/2+ε/2)s, with exactly one cluster
/// (of size t) inside `root_set` and every other cluster (of size t) outside.
/// A root set of a single vertex yields a singleton root cluster.
std::optional<RootedBlowup> rooted_blowup(const Graph& g, const VertexList& root_set, int s, double eps, int t,
                                          const RootedOptions& options = {});

}  // namespace blowup
