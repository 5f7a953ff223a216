#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/hypergraph.hpp"

namespace blowup {

struct Matching {
    std::vector<VertexList> edges;
};

struct MatchingOptions {
    /// Slack in the degree threshold (1 - 1/s + ε/2)m^{s-1} a random
    /// equipartition must meet before it is used.
    double eps = 0.1;
    int partition_retries = 200;
    std::uint64_t exchange_budget = 1'000'000;
    std::uint64_t seed = 0;
};

struct MatchingTelemetry {
    int partitions_tried = 0;
    int partitions_below_threshold = 0;
    int dummy_edges_initial = 0;
    int exchanges = 0;
    std::uint64_t exchange_nodes = 0;
};

/// Perfect matching of an explicit s-graph via a random equipartition, a
/// greedy partite matching padded with dummy edges, and exchanges that trade a
/// dummy edge plus a few matching edges for the same number of host edges
/// plus one. Returns nullopt when every partition is exhausted.
std::optional<Matching> hypergraph_perfect_matching(const Hypergraph& p, int s, const MatchingOptions& options = {},
                                                    MatchingTelemetry* telemetry = nullptr);

/// True iff `m` consists of pairwise disjoint edges of `p` covering every vertex.
bool is_perfect_matching(const Hypergraph& p, const Matching& m);

}  // namespace blowup
