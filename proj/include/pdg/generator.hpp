#pragma once

#include <cstdint>

#include "pdg/plane_graph.hpp"

namespace pdg {

struct GeneratorSpec {
  enum class Kind { grid, thinned_grid };
  enum class Orient { right_down, random, bidirected };

  Kind kind = Kind::grid;
  int rows = 1;
  int cols = 1;
  Orient orient = Orient::right_down;
  double keep = 1.0;  // per-arc survival probability for thinned grids
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  PlaneGraph graph;
  VertexId s = kNoVertex;  // top-left corner
  VertexId t = kNoVertex;  // bottom-right corner
};

// Plane grid digraph with arcs oriented per policy, inherited rotations,
// and deterministic output for a fixed spec and seed.
GeneratedInstance generate_instance(const GeneratorSpec& spec);

}  // namespace pdg
