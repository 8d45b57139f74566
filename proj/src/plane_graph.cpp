#include "pdg/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pdg {

PlaneGraph PlaneGraph::build(VertexId vertex_count, std::vector<Arc> arcs,
                             std::vector<std::vector<ArcId>> rotations) {
  if (vertex_count < 0) fail(Errc::bad_argument, "negative vertex count");
  if (static_cast<VertexId>(rotations.size()) != vertex_count)
    fail(Errc::malformed_rotation, "rotation table size does not match vertex count");
  const ArcId m = static_cast<ArcId>(arcs.size());
  for (ArcId a = 0; a < m; ++a) {
    const Arc& e = arcs[a];
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count)
      fail(Errc::bad_argument, "arc " + std::to_string(a) + " has an endpoint out of range");
    if (e.tail == e.head) fail(Errc::self_loop, "arc " + std::to_string(a) + " is a self-loop");
  }

  PlaneGraph g;
  g.n_ = vertex_count;
  g.arcs_ = std::move(arcs);
  g.rot_ = std::move(rotations);
  g.pos_.assign(2 * static_cast<std::size_t>(m), -1);
  g.out_.assign(vertex_count, {});
  std::vector<char> seen(2 * static_cast<std::size_t>(m), 0);
  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto& rot = g.rot_[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      ArcId a = rot[i];
      if (a < 0 || a >= m)
        fail(Errc::malformed_rotation,
             "rotation of vertex " + std::to_string(v) + " names unknown arc " + std::to_string(a));
      const Arc& e = g.arcs_[a];
      if (e.tail != v && e.head != v)
        fail(Errc::malformed_rotation, "arc " + std::to_string(a) + " listed at non-endpoint " +
                                           std::to_string(v));
      DartId d = make_dart(a, e.tail == v ? 0 : 1);
      if (seen[d])
        fail(Errc::malformed_rotation,
             "arc " + std::to_string(a) + " listed twice at vertex " + std::to_string(v));
      seen[d] = 1;
      g.pos_[d] = static_cast<int>(i);
      if (e.tail == v) g.out_[v].push_back(a);
    }
  }
  for (DartId d = 0; d < 2 * m; ++d)
    if (!seen[d])
      fail(Errc::malformed_rotation, "arc " + std::to_string(dart_arc(d)) +
                                         " missing from the rotation of vertex " +
                                         std::to_string(g.dart_origin(d)));
  return g;
}

DartId PlaneGraph::rotation_next(DartId d) const {
  VertexId v = dart_origin(d);
  const auto& rot = rot_[v];
  std::size_t i = static_cast<std::size_t>(pos_[d]) + 1;
  if (i == rot.size()) i = 0;
  return dart_at(v, rot[i]);
}

DartId PlaneGraph::rotation_prev(DartId d) const {
  VertexId v = dart_origin(d);
  const auto& rot = rot_[v];
  std::size_t i = static_cast<std::size_t>(pos_[d]);
  i = (i == 0 ? rot.size() : i) - 1;
  return dart_at(v, rot[i]);
}

PlaneGraph PlaneGraph::mirrored() const {
  auto rots = rot_;
  for (auto& r : rots) std::reverse(r.begin(), r.end());
  return build(n_, arcs_, std::move(rots));
}

FaceSet trace_faces(const PlaneGraph& g) {
  FaceSet fs;
  fs.face_of_dart.assign(g.dart_count(), kNoFace);
  std::vector<char> mark(g.vertex_count(), 0);
  for (DartId d0 = 0; d0 < g.dart_count(); ++d0) {
    if (fs.face_of_dart[d0] != kNoFace) continue;
    Face f;
    const FaceId id = static_cast<FaceId>(fs.faces.size());
    DartId d = d0;
    do {
      fs.face_of_dart[d] = id;
      f.darts.push_back(d);
      d = g.face_next(d);
    } while (d != d0);
    f.is_simple = true;
    for (DartId e : f.darts) {
      VertexId v = g.dart_origin(e);
      if (mark[v]) f.is_simple = false;
      mark[v] = 1;
    }
    for (DartId e : f.darts) mark[g.dart_origin(e)] = 0;
    fs.faces.push_back(std::move(f));
  }
  return fs;
}

std::vector<char> face_vertex_mask(const PlaneGraph& g, const FaceSet& fs, FaceId f) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (DartId d : fs.faces[f].darts) mask[g.dart_origin(d)] = 1;
  return mask;
}

std::optional<FaceId> face_containing_all(const PlaneGraph& g, const FaceSet& fs,
                                          const std::vector<VertexId>& vertices) {
  for (FaceId f = 0; f < static_cast<FaceId>(fs.faces.size()); ++f) {
    auto mask = face_vertex_mask(g, fs, f);
    bool all = true;
    for (VertexId v : vertices)
      if (!mask[v]) {
        all = false;
        break;
      }
    if (all) return f;
  }
  return std::nullopt;
}

int weak_component_count(const PlaneGraph& g) {
  std::vector<char> vis(g.vertex_count(), 0);
  int count = 0;
  std::vector<VertexId> stack;
  for (VertexId v0 = 0; v0 < g.vertex_count(); ++v0) {
    if (vis[v0]) continue;
    ++count;
    vis[v0] = 1;
    stack.push_back(v0);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (ArcId a : g.rotation(v)) {
        VertexId w = g.arc(a).tail == v ? g.arc(a).head : g.arc(a).tail;
        if (!vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

BfsLayers bfs_layers(const PlaneGraph& g, VertexId source) {
  if (source < 0 || source >= g.vertex_count()) fail(Errc::bad_argument, "source out of range");
  BfsLayers out;
  out.source = source;
  out.layer_of.assign(g.vertex_count(), kNoLayer);
  out.parent.assign(g.vertex_count(), kNoVertex);
  std::deque<VertexId> queue{source};
  out.layer_of[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (ArcId a : g.out_arcs(v)) {
      VertexId w = g.arc(a).head;
      if (out.layer_of[w] != kNoLayer) continue;
      out.layer_of[w] = out.layer_of[v] + 1;
      out.parent[w] = v;
      queue.push_back(w);
    }
  }
  int max_layer = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) max_layer = std::max(max_layer, out.layer_of[v]);
  out.layers.assign(max_layer + 1, {});
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (out.layer_of[v] != kNoLayer) out.layers[out.layer_of[v]].push_back(v);
  return out;
}

std::vector<VertexId> BfsLayers::path_from_source(VertexId v) const {
  if (layer_of[v] == kNoLayer) fail(Errc::bad_argument, "no path: vertex unreachable from source");
  std::vector<VertexId> rev_path{v};
  VertexId cur = v;
  while (cur != source) {
    cur = parent[cur];
    if (cur == kNoVertex) fail(Errc::bad_argument, "broken parent chain");
    rev_path.push_back(cur);
  }
  std::reverse(rev_path.begin(), rev_path.end());
  return rev_path;
}

std::vector<int> distances_to(const PlaneGraph& g, VertexId t) {
  if (t < 0 || t >= g.vertex_count()) fail(Errc::bad_argument, "target out of range");
  std::vector<std::vector<VertexId>> in(g.vertex_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) in[g.arc(a).head].push_back(g.arc(a).tail);
  std::vector<int> dist(g.vertex_count(), kNoLayer);
  std::deque<VertexId> queue{t};
  dist[t] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : in[v]) {
      if (dist[u] != kNoLayer) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

LayeredSubgraph layered_subgraph(const PlaneGraph& g, const BfsLayers& layers, int p,
                                 VertexId keep_vertex) {
  if (p < 1) fail(Errc::bad_argument, "layer prefix must be at least 1");
  if (keep_vertex < 0 || keep_vertex >= g.vertex_count())
    fail(Errc::bad_argument, "keep vertex out of range");
  const int kl = layers.layer_of[keep_vertex];
  if (kl != kNoLayer && kl < p)
    fail(Errc::vertex_removed, "keep vertex lies in a deleted layer");

  std::vector<char> survives(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    survives[v] = layers.layer_of[v] == kNoLayer || layers.layer_of[v] >= p;

  // weak component of keep_vertex among survivors
  std::vector<char> in_comp(g.vertex_count(), 0);
  std::vector<VertexId> stack{keep_vertex};
  in_comp[keep_vertex] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.rotation(v)) {
      VertexId w = g.arc(a).tail == v ? g.arc(a).head : g.arc(a).tail;
      if (survives[w] && !in_comp[w]) {
        in_comp[w] = 1;
        stack.push_back(w);
      }
    }
  }

  LayeredSubgraph out;
  out.from_original.assign(g.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in_comp[v]) continue;
    out.from_original[v] = static_cast<VertexId>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<ArcId> arc_map(g.arc_count(), kNoArc);
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& e = g.arc(a);
    if (in_comp[e.tail] && in_comp[e.head]) {
      arc_map[a] = static_cast<ArcId>(arcs.size());
      arcs.push_back({out.from_original[e.tail], out.from_original[e.head]});
      out.arc_to_original.push_back(a);
    }
  }
  std::vector<std::vector<ArcId>> rots(out.to_original.size());
  for (std::size_t nv = 0; nv < out.to_original.size(); ++nv) {
    for (ArcId a : g.rotation(out.to_original[nv]))
      if (arc_map[a] != kNoArc) rots[nv].push_back(arc_map[a]);
  }
  out.graph = PlaneGraph::build(static_cast<VertexId>(out.to_original.size()), std::move(arcs),
                                std::move(rots));
  return out;
}

}  // namespace pdg
