#pragma once

#include <vector>

#include "pdg/generator.hpp"
#include "pdg/plane_graph.hpp"

namespace fixtures {

using namespace pdg;

// 0->1, 1->2, 2->0 drawn as a triangle.
inline PlaneGraph triangle() {
  return PlaneGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {0, 1}, {1, 2}});
}

inline PlaneGraph single_arc() { return PlaneGraph::build(2, {{0, 1}}, {{0}, {0}}); }

inline PlaneGraph path3() { return PlaneGraph::build(3, {{0, 1}, {1, 2}}, {{0}, {0, 1}, {1}}); }

// s=0, upper=1, lower=2, t=3, chord 1->2. Paths s->t: two of length 2 and
// one of length 3 through the chord.
inline PlaneGraph diamond() {
  return PlaneGraph::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}},
                           {{0, 1}, {0, 4, 2}, {3, 4, 1}, {2, 3}});
}

// Diamond with a pendant target hanging off vertex 3.
inline PlaneGraph diamond_with_tail() {
  return PlaneGraph::build(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}, {3, 4}},
                           {{0, 1}, {0, 4, 2}, {3, 4, 1}, {5, 2, 3}, {5}});
}

// Two directed triangles sharing vertex 0; the outer face visits 0 twice.
inline PlaneGraph bowtie() {
  return PlaneGraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}},
                           {{5, 0, 2, 3}, {1, 0}, {2, 1}, {4, 3}, {5, 4}});
}

// Directed square 0->1->2->3->0 with a spoke 0->4 into the centre.
inline PlaneGraph square_with_spoke() {
  return PlaneGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}},
                           {{0, 4, 3}, {1, 0}, {2, 1}, {2, 3}, {4}});
}

// Directed hexagon 0..5 with an interior tail 0->6->7.
inline PlaneGraph hex_with_tail() {
  return PlaneGraph::build(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}},
      {{0, 6, 5}, {0, 1}, {1, 2}, {3, 2}, {4, 3}, {5, 4}, {6, 7}, {7}});
}

// Comparator playground: hexagonal outer boundary v=0, A=1, B=2, w=3, C=4,
// D=5 plus three v->w routes and witnesses for the area relations.
//   P1 = 0,6,7,3      (west route)
//   P2 = 0,8,9,3      (east route)
//   P3 = 0,8,10,9,7,3 (branches east off P2 then crosses back west)
// e=11 is a pendant inside the pocket between P2's and P3's tails.
struct FigureOne {
  PlaneGraph graph;
  std::vector<VertexId> p1{0, 6, 7, 3};
  std::vector<VertexId> p2{0, 8, 9, 3};
  std::vector<VertexId> p3{0, 8, 10, 9, 7, 3};
};

inline FigureOne figure_one() {
  FigureOne f;
  f.graph = PlaneGraph::build(12,
                              {{0, 1},   // 0  v->A
                               {1, 2},   // 1  A->B
                               {2, 3},   // 2  B->w
                               {3, 4},   // 3  w->C
                               {4, 5},   // 4  C->D
                               {5, 0},   // 5  D->v
                               {0, 6},   // 6  v->a1
                               {6, 7},   // 7  a1->a2
                               {7, 3},   // 8  a2->w
                               {0, 8},   // 9  v->b1
                               {8, 9},   // 10 b1->b2
                               {9, 3},   // 11 b2->w
                               {8, 10},  // 12 b1->c
                               {10, 9},  // 13 c->b2
                               {9, 7},   // 14 b2->a2
                               {9, 11}}, // 15 b2->e
                              {{0, 9, 6, 5},
                               {1, 0},
                               {2, 1},
                               {3, 8, 11, 2},
                               {3, 4},
                               {4, 5},
                               {7, 6},
                               {14, 8, 7},
                               {12, 10, 9},
                               {11, 15, 14, 10, 13},
                               {13, 12},
                               {15}});
  return f;
}

// Two internally disjoint s->t routes of the given lengths; s=0, t=1.
inline PlaneGraph theta(int upper_len, int lower_len) {
  std::vector<Arc> arcs;
  std::vector<std::vector<ArcId>> rots(2);
  VertexId next = 2;
  auto lay_route = [&](int len) {
    std::vector<ArcId> route_arcs;
    VertexId prev = 0;
    for (int i = 0; i < len; ++i) {
      VertexId to = i + 1 == len ? 1 : next++;
      route_arcs.push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back({prev, to});
      prev = to;
    }
    return route_arcs;
  };
  auto upper = lay_route(upper_len);
  auto lower = lay_route(lower_len);
  rots.resize(next);
  rots[0] = {upper.front(), lower.front()};  // upper leaves north-east of lower
  rots[1] = {lower.back(), upper.back()};
  auto chain = [&](const std::vector<ArcId>& route) {
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      VertexId v = arcs[route[i]].head;
      if (v != 1) rots[v] = {route[i + 1], route[i]};  // out west-to-east: out, in
    }
  };
  chain(upper);
  chain(lower);
  return PlaneGraph::build(next, std::move(arcs), std::move(rots));
}

// All x->y and y->t routes share the interior vertex 1.
inline PlaneGraph bottleneck() {
  return PlaneGraph::build(4, {{0, 1}, {1, 2}, {2, 1}, {1, 3}},
                           {{0}, {3, 2, 1, 0}, {1, 2}, {3}});
}

inline GeneratedInstance random_instance(std::uint64_t seed, int max_side = 4) {
  for (;; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::thinned_grid;
    spec.rows = 2 + static_cast<int>(seed % static_cast<std::uint64_t>(max_side - 1));
    spec.cols = 2 + static_cast<int>((seed / 7) % static_cast<std::uint64_t>(max_side - 1));
    switch (seed % 3) {
      case 0: spec.orient = GeneratorSpec::Orient::right_down; break;
      case 1: spec.orient = GeneratorSpec::Orient::random; break;
      default: spec.orient = GeneratorSpec::Orient::bidirected; break;
    }
    spec.keep = 0.55 + 0.4 * static_cast<double>(seed % 5) / 4.0;
    spec.seed = seed * 0x9e3779b97f4a7c15ULL + 1;
    try {
      return generate_instance(spec);
    } catch (const Error& e) {
      if (e.code() != Errc::empty_after_thinning) throw;
    }
  }
}

}  // namespace fixtures
