#pragma once

#include <string>

#include "pdg/plane_graph.hpp"

namespace pdg {

// Text format, one directive per line, '#' comments:
//   pdg 1
//   n <vertex_count>
//   arcs <arc_count>
//   a <arc_id> <tail> <head>
//   rot <vertex> <arc_id>...
PlaneGraph parse_pdg(const std::string& text);
PlaneGraph parse_pdg_file(const std::string& path);

// Canonical emission: sorted directives, one rotation line per vertex.
// parse(emit(g)) reproduces g exactly.
std::string emit_pdg(const PlaneGraph& g);
void write_pdg_file(const std::string& path, const PlaneGraph& g);

}  // namespace pdg
