#pragma once

#include <optional>
#include <vector>

#include "pdg/grounded.hpp"
#include "pdg/plane_graph.hpp"

namespace pdg {

enum class Verdict { found, no_detour, s_equals_t, t_unreachable, timeout };

const char* verdict_name(Verdict v);

struct DetourWitness {
  std::vector<VertexId> path;
  int length = 0;
  int baseline = 0;  // dist(s, t)
};

struct SuperSourceResult {
  PlaneGraph graph;
  VertexId source = kNoVertex;
};

// Fresh vertex with arcs into every listed layer vertex except y, embedded
// inside the face whose boundary carries the whole layer.
SuperSourceResult add_super_source(const PlaneGraph& g, const std::vector<VertexId>& layer_vertices,
                                   VertexId y);

struct PathPair {
  GroundedPath mid;   // x -> y
  GroundedPath tail;  // y -> t
};

// One side of the greedy: the extremal x->y path, then a reachability check
// from y to t around it. skip1/skip2 name arcs that must never appear on
// the forward path (the simplification arcs run against it).
std::optional<PathPair> one_face_candidate(const PlaneGraph& h, const FaceSet& fs, FaceId outer,
                                           VertexId x, VertexId y, VertexId t, Side side,
                                           ArcId skip1 = kNoArc, ArcId skip2 = kNoArc);

// Internally disjoint x->y and y->t paths, x and y on the elected outer
// face. Greedy: (y,x)-simplify, then test the leftmost and rightmost x->y
// paths; one of them works whenever any solution exists.
std::optional<PathPair> one_face_two_paths(const PlaneGraph& h, const FaceSet& fs, FaceId outer,
                                           VertexId x, VertexId y, VertexId t);

struct DetourResult {
  Verdict verdict = Verdict::no_detour;
  std::optional<DetourWitness> witness;
};

// Is there a simple s->t path strictly longer than dist(s,t)?
DetourResult directed_detour(const PlaneGraph& g, VertexId s, VertexId t, int jobs = 1);

}  // namespace pdg
