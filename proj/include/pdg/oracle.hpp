#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdg/detour.hpp"
#include "pdg/grounded.hpp"
#include "pdg/long_detour.hpp"
#include "pdg/plane_graph.hpp"

namespace pdg {

// Ground-truth helpers for tests: exhaustive, guarded, never fast.

inline constexpr std::uint64_t kDefaultPathGuard = 1'000'000;

// Every simple s->t path, as vertex/arc sequences. Trips the guard instead
// of truncating silently.
std::vector<GroundedPath> enumerate_simple_paths(const PlaneGraph& g, VertexId s, VertexId t,
                                                 std::uint64_t max_paths = kDefaultPathGuard);

// Any simple s->t path of length >= dist(s,t) + k, by enumeration.
std::optional<GroundedPath> oracle_detour(const PlaneGraph& g, VertexId s, VertexId t, int k,
                                          std::uint64_t max_paths = kDefaultPathGuard);

// Exhaustive search for internally disjoint x->y and y->t paths.
std::optional<PathPair> oracle_two_disjoint_paths(const PlaneGraph& h, VertexId x, VertexId y,
                                                  VertexId t,
                                                  std::uint64_t max_paths = kDefaultPathGuard);

enum class LexOrder { less, greater, prefix_less, prefix_greater };

inline bool lex_left_of(LexOrder o) {
  return o == LexOrder::less || o == LexOrder::prefix_less;
}

// Literal reference comparator for grounded paths sharing an origin on the
// simple outer face: longest common arc prefix, then the clockwise order of
// the diverging arcs around the branch vertex, pivoting on the entry arc
// (the outer-face corner when the branch is the origin itself).
LexOrder lex_compare(const PlaneGraph& g, const FaceSet& fs, FaceId outer, const GroundedPath& a,
                     const GroundedPath& b);

// True iff the family realises every pattern on every width-subset.
bool verify_universal(const ColoringFamily& family, int n, int width,
                      std::uint64_t max_checks = 200'000'000);

}  // namespace pdg
