#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pdg/detour.hpp"
#include "pdg/grounded.hpp"
#include "pdg/plane_graph.hpp"

namespace pdg {

enum class ColoringMode { monte_carlo, universal };

// Family of two-colourings, stored as green sets over a fixed ground set.
struct ColoringFamily {
  ColoringMode mode = ColoringMode::universal;
  int ground_size = 0;
  int width = 0;
  std::vector<std::vector<std::uint64_t>> sets;  // bitset blocks per member

  std::size_t size() const { return sets.size(); }
  bool contains(std::size_t set_index, int element) const {
    return (sets[set_index][element >> 6] >> (element & 63)) & 1u;
  }
};

// (n, width)-universal family: for every width-subset A of the ground set
// the family realises all 2^width intersections with A. Greedy cover over
// the full constraint table, so the result is universal by construction;
// sizes whose constraint table exceeds the guard are rejected.
ColoringFamily universal_family(int n, int width, std::uint64_t seed = 0);

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct BandCheckResult {
  Verdict verdict = Verdict::no_detour;
  std::optional<DetourWitness> witness;
};

// Simple s->t path whose excess over dist(s,t) lies in [k, 3k-1], found by
// a depth-first search pruned with distances into t. Complete for the band;
// worst-case exponential, so a deadline can abort it with a timeout verdict.
BandCheckResult exact_band_check(const PlaneGraph& g, VertexId s, VertexId t, int k,
                                 const Deadline& deadline = {});

// One colour-coded attempt on the simplified layered graph: for every
// candidate split vertex, chase the extremal all-green prefix from x, cut
// along it, then the extremal copy-avoiding continuation to y; accept when
// the junction is a simple mid path leaving t reachable from y.
std::optional<PathPair> special_pair_trial(const PlaneGraph& h, const FaceSet& fs, FaceId outer,
                                           VertexId x, VertexId y, VertexId t, int k,
                                           const std::vector<char>& green, Side side);

struct LongDetourOptions {
  ColoringMode mode = ColoringMode::universal;
  std::uint64_t seed = 0;
  double delta = 1e-3;  // Monte Carlo failure bound per yes-instance
  std::optional<std::int64_t> budget_ms;
  int jobs = 1;
};

struct LongDetourResult {
  Verdict verdict = Verdict::no_detour;
  std::optional<DetourWitness> witness;
  bool via_band_check = false;
};

// Is there a simple s->t path of length at least dist(s,t) + k?
LongDetourResult long_detour(const PlaneGraph& g, VertexId s, VertexId t, int k,
                             const LongDetourOptions& options = {});

}  // namespace pdg
