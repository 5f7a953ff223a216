#pragma once

#include <cstdint>

#include "blowup/graph.hpp"
#include "blowup/hypergraph.hpp"

namespace blowup {

enum class InheritanceMode {
    /// δ(G[S]) ≥ (1/2 + ε/2)s.
    Absolute,
    /// Every v ∈ S has deg_{G[S]}(v)/(s-1) ≥ deg_G(v)/(n-1) - ε.
    Relative,
};

/// The property s-graph of degree-inheriting s-sets of a host graph.
struct PropertySpec {
    const Graph* host = nullptr;
    int s = 0;
    double eps = 0.0;
    InheritanceMode mode = InheritanceMode::Absolute;

    PropertySpec(const Graph& g, int s, double eps, InheritanceMode mode = InheritanceMode::Absolute);
};

struct DegreeEstimate {
    double estimate = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    /// Binomial standard error of the estimate.
    double standard_error() const;
};

bool inherits_degree(const PropertySpec& spec, const VertexList& set);

/// Fraction of `trials` uniformly drawn s-sets containing v that inherit.
/// Trial i uses the stream seeded by mix_seed(seed, i).
DegreeEstimate property_degree_estimate(const PropertySpec& spec, Vertex v, std::uint64_t trials,
                                        std::uint64_t seed);

/// Exact fraction of inheriting s-sets containing v, by full enumeration of
/// the C(n-1, s-1) candidates. Throws when the count exceeds `budget`.
double property_degree_exact(const PropertySpec& spec, Vertex v, std::uint64_t budget = 50'000'000);

/// The property s-graph as an implicit hypergraph (membership oracle).
Hypergraph property_hypergraph(const PropertySpec& spec);

/// Hoeffding-type tail bound 2·exp(-2·ell²/n_draws).
double hypergeometric_tail_bound(double n_draws, double ell);

/// Binomial coefficient as a double (exact for the small values used here).
double binomial(int n, int k);

}  // namespace blowup
