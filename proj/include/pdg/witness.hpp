#pragma once

#include <string>
#include <vector>

#include "pdg/plane_graph.hpp"

namespace pdg {

struct WitnessReport {
  bool ok = false;
  std::string reason;  // first failed check
};

// Checks that path is a simple directed s->t walk over existing arcs whose
// length reaches dist(s,t) + k.
WitnessReport verify_witness(const PlaneGraph& g, VertexId s, VertexId t, int k,
                             const std::vector<VertexId>& path);

}  // namespace pdg
