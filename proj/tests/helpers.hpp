#pragma once

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "pdg/oracle.hpp"
#include "pdg/plane_graph.hpp"

namespace helpers {

using namespace pdg;

// Euler relation against weak components, plus the dart partition.
inline void check_embedding(const PlaneGraph& g) {
  const FaceSet fs = trace_faces(g);
  std::size_t total_darts = 0;
  for (const Face& f : fs.faces) total_darts += f.darts.size();
  CHECK(total_darts == static_cast<std::size_t>(g.dart_count()));
  for (DartId d = 0; d < g.dart_count(); ++d) CHECK(fs.face_of_dart[d] != kNoFace);
  const int components = weak_component_count(g);
  const int isolated = [&] {
    int count = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) count += g.degree(v) == 0;
    return count;
  }();
  // every component with at least one arc satisfies V - E + F = 2 against
  // its own traced faces, and isolated vertices carry no darts at all
  const long long v = g.vertex_count() - isolated;
  const long long e = g.arc_count();
  const long long f = static_cast<long long>(fs.faces.size());
  const long long c = components - isolated;
  if (e > 0) CHECK(v - e + f == 2 * c);
}

// Lexicographic minimum / maximum of a set of paths sharing an origin.
inline GroundedPath lex_extreme(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                                std::vector<GroundedPath> paths, bool minimum) {
  REQUIRE(!paths.empty());
  GroundedPath best = paths.front();
  for (std::size_t i = 1; i < paths.size(); ++i) {
    const LexOrder o = lex_compare(g, fs, outer, paths[i], best);
    if (minimum == lex_left_of(o)) best = paths[i];
  }
  return best;
}

}  // namespace helpers
