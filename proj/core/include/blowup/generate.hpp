#pragma once

#include <cstdint>
#include <string>

#include "blowup/graph.hpp"

namespace blowup {

enum class GeneratorKind { GnpRepaired, DiracExtremal, CliqueUnionPlus, FromFile };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::GnpRepaired;
    int n = 0;
    /// Edge probability for GnpRepaired.
    double p = 0.8;
    int delta_target = 0;
    /// Overlap half-width for DiracExtremal; derived from delta_target when negative.
    int d = -1;
    /// Block shape for CliqueUnionPlus: complete `parts`-partite blocks with parts of size `part_size`.
    int parts = 4;
    int part_size = 3;
    std::string path;
    std::uint64_t seed = 0;
};

GeneratorKind parse_generator_kind(const std::string& name);

/// Builds the instance and checks δ(G) ≥ delta_target before returning.
Graph generate(const GeneratorSpec& spec);

/// Adds edges from the lowest-degree vertex (ties by id) to its non-neighbours
/// in ascending id order until δ(G) ≥ target.
void repair_min_degree(Graph& g, int target);

}  // namespace blowup
