#pragma once

#include <optional>
#include <vector>

#include "pdg/types.hpp"

namespace pdg {

struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  bool operator==(const Arc&) const = default;
};

// A dart is one of the two traversal sides of an arc: side 0 originates at
// the tail, side 1 at the head. Faces are orbits over darts.
constexpr DartId make_dart(ArcId a, int side) { return static_cast<DartId>(2 * a + side); }
constexpr ArcId dart_arc(DartId d) { return d >> 1; }
constexpr int dart_side(DartId d) { return d & 1; }
constexpr DartId dart_rev(DartId d) { return d ^ 1; }

// Immutable plane digraph: arc list plus per-vertex rotations listing the
// incident arcs in anti-clockwise order. Parallel arcs are first-class and
// always identified by ArcId; self-loops are rejected.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  static PlaneGraph build(VertexId vertex_count, std::vector<Arc> arcs,
                          std::vector<std::vector<ArcId>> rotations);

  VertexId vertex_count() const { return n_; }
  ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }
  DartId dart_count() const { return static_cast<DartId>(2 * arcs_.size()); }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<ArcId>& rotation(VertexId v) const { return rot_[v]; }
  const std::vector<std::vector<ArcId>>& rotations() const { return rot_; }
  const std::vector<ArcId>& out_arcs(VertexId v) const { return out_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }

  VertexId dart_origin(DartId d) const {
    const Arc& a = arcs_[dart_arc(d)];
    return dart_side(d) ? a.head : a.tail;
  }
  VertexId dart_target(DartId d) const {
    const Arc& a = arcs_[dart_arc(d)];
    return dart_side(d) ? a.tail : a.head;
  }

  // The dart of arc a originating at v; v must be an endpoint of a.
  DartId dart_at(VertexId v, ArcId a) const { return make_dart(a, arcs_[a].tail == v ? 0 : 1); }

  // Index of a dart's arc inside its origin's rotation.
  int rotation_index(DartId d) const { return pos_[d]; }

  DartId rotation_next(DartId d) const;  // anti-clockwise successor at the origin
  DartId rotation_prev(DartId d) const;

  // Face-successor permutation: anti-clockwise successor of the reversed dart
  // around its origin. Orbits of this map are the faces; the traced region
  // lies to the right of every dart of its orbit.
  DartId face_next(DartId d) const { return rotation_next(dart_rev(d)); }

  // Same arcs, every rotation reversed; swaps the left/right sense.
  PlaneGraph mirrored() const;

  bool operator==(const PlaneGraph&) const = default;

 private:
  VertexId n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> rot_;
  std::vector<int> pos_;                 // dart -> index in origin's rotation
  std::vector<std::vector<ArcId>> out_;  // out-adjacency in rotation order
};

struct Face {
  std::vector<DartId> darts;  // one orbit of face_next, cyclic
  bool is_simple = true;      // boundary walk repeats no vertex
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<FaceId> face_of_dart;
};

FaceSet trace_faces(const PlaneGraph& g);

std::vector<char> face_vertex_mask(const PlaneGraph& g, const FaceSet& fs, FaceId f);

// First face whose boundary walk visits every listed vertex, if any.
std::optional<FaceId> face_containing_all(const PlaneGraph& g, const FaceSet& fs,
                                          const std::vector<VertexId>& vertices);

int weak_component_count(const PlaneGraph& g);

struct BfsLayers {
  VertexId source = kNoVertex;
  std::vector<int> layer_of;  // kNoLayer where unreachable
  std::vector<std::vector<VertexId>> layers;
  std::vector<VertexId> parent;  // BFS tree predecessor, kNoVertex at source

  int layer(VertexId v) const { return layer_of[v]; }
  std::vector<VertexId> path_from_source(VertexId v) const;
};

BfsLayers bfs_layers(const PlaneGraph& g, VertexId source);

// Directed distance from every vertex into t; kNoLayer where t is unreachable.
std::vector<int> distances_to(const PlaneGraph& g, VertexId t);

struct LayeredSubgraph {
  PlaneGraph graph;
  std::vector<VertexId> to_original;
  std::vector<VertexId> from_original;  // kNoVertex where removed
  std::vector<ArcId> arc_to_original;
};

// G with BFS layers 0..p-1 deleted, restricted to the weak component of
// keep_vertex; rotations are inherited and ids renumbered densely.
LayeredSubgraph layered_subgraph(const PlaneGraph& g, const BfsLayers& layers, int p,
                                 VertexId keep_vertex);

}  // namespace pdg
