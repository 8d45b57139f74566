#include "pdg/oracle.hpp"

#include <algorithm>

namespace pdg {

namespace {

struct Enumerator {
  const PlaneGraph& g;
  VertexId target;
  std::uint64_t max_paths;
  std::uint64_t max_steps;
  std::uint64_t steps = 0;
  std::vector<char> on_path;
  GroundedPath current;
  std::vector<GroundedPath> found;

  Enumerator(const PlaneGraph& graph, VertexId t, std::uint64_t guard)
      : g(graph), target(t), max_paths(guard), max_steps(guard * 64), on_path(graph.vertex_count(), 0) {}

  void run(VertexId v) {
    if (++steps > max_steps) fail(Errc::guard_tripped, "path enumeration step guard tripped");
    current.vertices.push_back(v);
    on_path[v] = 1;
    if (v == target) {
      if (found.size() >= max_paths) fail(Errc::guard_tripped, "path enumeration guard tripped");
      found.push_back(current);
    } else {
      for (ArcId a : g.out_arcs(v)) {
        VertexId w = g.arc(a).head;
        if (on_path[w]) continue;
        current.arcs.push_back(a);
        run(w);
        current.arcs.pop_back();
      }
    }
    on_path[v] = 0;
    current.vertices.pop_back();
  }
};

}  // namespace

std::vector<GroundedPath> enumerate_simple_paths(const PlaneGraph& g, VertexId s, VertexId t,
                                                 std::uint64_t max_paths) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    fail(Errc::bad_argument, "terminal out of range");
  Enumerator e(g, t, max_paths);
  e.run(s);
  return std::move(e.found);
}

std::optional<GroundedPath> oracle_detour(const PlaneGraph& g, VertexId s, VertexId t, int k,
                                          std::uint64_t max_paths) {
  const BfsLayers layers = bfs_layers(g, s);
  if (layers.layer_of[t] == kNoLayer) return std::nullopt;
  const int need = layers.layer_of[t] + k;
  for (const GroundedPath& p : enumerate_simple_paths(g, s, t, max_paths))
    if (p.length() >= need) return p;
  return std::nullopt;
}

std::optional<PathPair> oracle_two_disjoint_paths(const PlaneGraph& h, VertexId x, VertexId y,
                                                  VertexId t, std::uint64_t max_paths) {
  for (const GroundedPath& mid : enumerate_simple_paths(h, x, y, max_paths)) {
    std::vector<char> removed(h.vertex_count(), 0);
    for (VertexId v : mid.vertices) removed[v] = 1;
    removed[y] = 0;
    auto tail = reachable_path(h, y, t, removed);
    if (tail) return PathPair{mid, *tail};
  }
  return std::nullopt;
}

LexOrder lex_compare(const PlaneGraph& g, const FaceSet& fs, FaceId outer, const GroundedPath& a,
                     const GroundedPath& b) {
  if (a.vertices.empty() || b.vertices.empty()) fail(Errc::bad_argument, "empty path");
  if (a.origin() != b.origin()) fail(Errc::different_origins, "paths start at different vertices");
  const Face& face = fs.faces[outer];
  if (!face.is_simple) fail(Errc::bad_argument, "outer face must be simple");
  const VertexId v = a.origin();
  int start = -1;
  for (std::size_t i = 0; i < face.darts.size(); ++i)
    if (g.dart_origin(face.darts[i]) == v) start = static_cast<int>(i);
  if (start < 0) fail(Errc::not_grounded, "origin not on the outer face");

  std::size_t i = 0;
  while (i < a.arcs.size() && i < b.arcs.size() && a.arcs[i] == b.arcs[i]) ++i;
  if (i == a.arcs.size() && i == b.arcs.size()) fail(Errc::bad_argument, "paths are equal");
  if (i == a.arcs.size()) return LexOrder::prefix_less;
  if (i == b.arcs.size()) return LexOrder::prefix_greater;

  const VertexId branch = a.vertices[i];
  const int ref = i == 0 ? g.rotation_index(face.darts[start])
                         : g.rotation_index(make_dart(a.arcs[i - 1], 1));
  const int deg = g.degree(branch);
  auto clockwise_rank = [&](ArcId arc) {
    int d = (ref - g.rotation_index(make_dart(arc, 0))) % deg;
    if (d < 0) d += deg;
    return d == 0 ? deg : d;
  };
  return clockwise_rank(a.arcs[i]) < clockwise_rank(b.arcs[i]) ? LexOrder::less : LexOrder::greater;
}

bool verify_universal(const ColoringFamily& family, int n, int width, std::uint64_t max_checks) {
  if (width <= 0 || width > n) fail(Errc::width_too_large, "bad width");
  std::uint64_t combos = 1;
  for (int j = 0; j < width; ++j) combos = combos * static_cast<std::uint64_t>(n - j) / (j + 1);
  if (combos * family.size() * static_cast<std::uint64_t>(width) > max_checks)
    fail(Errc::guard_tripped, "universal verification guard tripped");
  if (width >= 26) fail(Errc::guard_tripped, "pattern space too wide to verify");
  const std::uint64_t target = 1ULL << width;

  std::vector<int> idx(width);
  for (int j = 0; j < width; ++j) idx[j] = j;
  while (true) {
    std::vector<char> seen(target, 0);
    std::uint64_t distinct = 0;
    for (std::size_t u = 0; u < family.size() && distinct < target; ++u) {
      int pattern = 0;
      for (int j = 0; j < width; ++j)
        pattern |= static_cast<int>(family.contains(u, idx[j])) << j;
      if (!seen[pattern]) {
        seen[pattern] = 1;
        ++distinct;
      }
    }
    if (distinct != target) return false;
    int j = width - 1;
    while (j >= 0 && idx[j] == n - width + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < width; ++l) idx[l] = idx[l - 1] + 1;
  }
  return true;
}

}  // namespace pdg
