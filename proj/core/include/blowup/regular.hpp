#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/hypergraph.hpp"
#include "blowup/structures.hpp"

namespace blowup {

enum class CertMode { Exhaustive, Sampled, Uncertified };

const char* to_string(CertMode m);

struct Certification {
    CertMode mode = CertMode::Uncertified;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// Disjoint parts of a hypergraph together with the (ρ, d) parameters they
/// were certified lower-regular at.
struct RegularTuple {
    std::vector<VertexList> parts;
    double rho = 0.0;
    double d = 0.0;
    Certification cert;
    double density = 0.0;

    std::size_t vertex_count() const;
};

enum class RegularityMode { Auto, Exhaustive, Sampled };

inline constexpr std::uint64_t kExhaustiveSubsetBudget = 10'000'000;

struct RegularityCheck {
    RegularityMode mode = RegularityMode::Auto;
    std::uint64_t budget = kExhaustiveSubsetBudget;
    int trials = 10'000;
    std::uint64_t seed = 0;
};

/// Partite edge count of `parts` divided by the product of the part sizes.
double tuple_density(const Hypergraph& p, const std::vector<VertexList>& parts);

/// Number of subset tuples the exhaustive check enumerates. Only the smallest
/// admissible subsets ⌈ρ|V_i|⌉ need visiting (the minimum density over larger
/// subsets is attained by discarding the vertices of largest contribution), and
/// the last part is optimised in closed form, so this is
/// Π_{i<s} C(|V_i|, ⌈ρ|V_i|⌉) over all parts but the last.
std::uint64_t exhaustive_subset_count(const std::vector<VertexList>& parts, double rho);

/// PASS when certified (exhaustively) lower-regular, FAIL with witness subsets
/// in `witness_sets`, UNKNOWN when sampling found no witness.
Verdict check_lower_regular(const Hypergraph& p, const std::vector<VertexList>& parts, double rho, double d,
                            const RegularityCheck& how = {});

struct RegularTupleIteration {
    int part_size = 0;
    double density = 0.0;
    /// Density of the block tuple chosen to continue with (unset on the last
    /// iteration, which certified).
    std::optional<double> selected_density;
    Status check = Status::Pass;
};

struct RegularTupleTelemetry {
    std::vector<RegularTupleIteration> iterations;
};

/// Density-increment search for a (ρ, d)-lower-regular balanced sub-tuple.
std::optional<RegularTuple> find_lower_regular_tuple(const Hypergraph& p, const std::vector<VertexList>& parts,
                                                     double rho, double d, const RegularityCheck& how = {},
                                                     RegularTupleTelemetry* telemetry = nullptr);

}  // namespace blowup
