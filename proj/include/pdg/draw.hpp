#pragma once

#include <string>
#include <vector>

#include "pdg/plane_graph.hpp"

namespace pdg {

// Static SVG rendering: the face with the longest boundary is pinned to a
// circle and the rest placed by iterated neighbour averaging. Cosmetic only.
std::string render_svg(const PlaneGraph& g, const std::vector<VertexId>& highlight = {});

std::string render_dot(const PlaneGraph& g, const std::vector<VertexId>& highlight = {});

}  // namespace pdg
