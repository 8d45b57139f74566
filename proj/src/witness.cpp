#include "pdg/witness.hpp"

#include <algorithm>

namespace pdg {

WitnessReport verify_witness(const PlaneGraph& g, VertexId s, VertexId t, int k,
                             const std::vector<VertexId>& path) {
  if (path.empty()) return {false, "empty path"};
  for (VertexId v : path)
    if (v < 0 || v >= g.vertex_count())
      return {false, "vertex " + std::to_string(v) + " out of range"};
  if (path.front() != s) return {false, "path does not start at s"};
  if (path.back() != t) return {false, "path does not end at t"};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bool found = false;
    for (ArcId a : g.out_arcs(path[i]))
      if (g.arc(a).head == path[i + 1]) {
        found = true;
        break;
      }
    if (!found)
      return {false, "no arc " + std::to_string(path[i]) + "->" + std::to_string(path[i + 1])};
  }
  if (!std::all_of(path.begin(), path.end(), [&, seen = std::vector<char>(g.vertex_count(), 0)](
                                                 VertexId v) mutable { return !seen[v]++; }))
    return {false, "path repeats a vertex"};
  const BfsLayers layers = bfs_layers(g, s);
  if (layers.layer_of[t] == kNoLayer) return {false, "t unreachable from s"};
  const int need = layers.layer_of[t] + k;
  const int len = static_cast<int>(path.size()) - 1;
  if (len < need)
    return {false, "length " + std::to_string(len) + " below required " + std::to_string(need)};
  return {true, ""};
}

}  // namespace pdg
