#pragma once

#include <iosfwd>
#include <string>

#include "blowup/hypergraph.hpp"
#include "blowup/structures.hpp"

namespace blowup {

// Graph text format: header "n m", then m lines "u v" with 0-based ids.
// Blank lines and anything after '#' are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

// Hypergraph text format: header "n s m", then m lines of s vertex ids.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph load_hypergraph(const std::string& path);

// Certificate: JSON object {"n", "c", "eta", "clusters": [[...], ...]}.
std::string serialize_certificate(const CycleBlowupCertificate& cert);
CycleBlowupCertificate parse_certificate(const std::string& text);
CycleBlowupCertificate load_certificate(const std::string& path);
void save_certificate(const std::string& path, const CycleBlowupCertificate& cert);

// Blow-up: JSON object {"reduced": {"n", "edges"}, "clusters", "balance"}.
std::string serialize_blowup(const Blowup& b);
Blowup parse_blowup(const std::string& text);

}  // namespace blowup
