#pragma once

#include <optional>
#include <vector>

#include "pdg/plane_graph.hpp"

namespace pdg {

enum class Side { left, right };

// Directed simple path carrying both vertex and arc ids; the arcs matter
// because simplification and cutting introduce parallel arcs.
struct GroundedPath {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arcs;

  int length() const { return static_cast<int>(arcs.size()); }
  VertexId origin() const { return vertices.front(); }
  VertexId destination() const { return vertices.back(); }
  bool operator==(const GroundedPath&) const = default;
};

bool path_vertices_distinct(const std::vector<VertexId>& vertices);
GroundedPath concat_paths(const GroundedPath& a, const GroundedPath& b);

// Any simple from->to path through vertices clear of the removed mask.
std::optional<GroundedPath> reachable_path(const PlaneGraph& g, VertexId from, VertexId to,
                                           const std::vector<char>& removed);

struct Simplification {
  PlaneGraph graph;
  FaceSet faces;
  FaceId outer = kNoFace;  // the two-arc face on {u, v}
  ArcId f1 = kNoArc, f2 = kNoArc;
};

// (u,v)-simplification: two parallel u->v arcs drawn through the elected
// outer face so that the new outer face is the 2-gon they bound. The old
// outer face splits into two faces; all other faces survive unchanged.
Simplification simplify_outer(const PlaneGraph& g, const FaceSet& fs, FaceId outer, VertexId u,
                              VertexId v);

// Lexicographically extremal v->w path among paths whose vertices all pass
// the allowed mask (nullptr admits everything). Ordered DFS; the entry
// reference at v is the outer-face corner. Empty when w is unreachable.
std::optional<GroundedPath> extremal_path(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                                          VertexId v, VertexId w, Side side,
                                          const std::vector<char>* allowed = nullptr);

struct CutResult {
  PlaneGraph graph;
  FaceSet faces;
  FaceId outer = kNoFace;
  std::vector<VertexId> new_boundary;  // Z: the split copies
  std::vector<VertexId> lineage;       // new vertex id -> input vertex id
  std::vector<ArcId> arc_lineage;      // new arc id -> input arc id
};

// Cuts the graph along a grounded path whose interior avoids the outer
// boundary: every path vertex but the destination splits into two boundary
// copies and the destination lands on the (still simple) outer face.
CutResult cut_along_path(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                         const GroundedPath& path);

struct AreaSplit {
  std::vector<char> left, right;  // vertex membership masks
};

// Vertex sets of the two areas a doubly grounded path bounds: the path plus
// one outer-boundary segment each, plus the enclosed vertices, via face
// two-colouring across arcs off the closed walk.
AreaSplit left_right_areas(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                           const GroundedPath& path);

}  // namespace pdg
