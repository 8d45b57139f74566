#include "pdg/detour.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdg/detail/parallel.hpp"
#include "pdg/witness.hpp"

namespace pdg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::found: return "yes";
    case Verdict::no_detour: return "no";
    case Verdict::s_equals_t: return "no";
    case Verdict::t_unreachable: return "unreachable";
    case Verdict::timeout: return "timeout";
  }
  return "?";
}

SuperSourceResult add_super_source(const PlaneGraph& g, const std::vector<VertexId>& layer_vertices,
                                   VertexId y) {
  FaceSet fs = trace_faces(g);
  auto carrier = face_containing_all(g, fs, layer_vertices);
  if (!carrier)
    fail(Errc::no_common_face, "no face carries the whole layer; upstream invariant broken");
  const Face& face = fs.faces[*carrier];

  std::vector<VertexId> targets;
  for (VertexId v : layer_vertices)
    if (v != y) targets.push_back(v);

  // one corner per target: its first occurrence along the carrier orbit
  struct Anchor {
    int orbit_pos;
    VertexId vertex;
    DartId dep;
  };
  std::vector<Anchor> anchors;
  for (VertexId u : targets) {
    for (std::size_t i = 0; i < face.darts.size(); ++i)
      if (g.dart_origin(face.darts[i]) == u) {
        anchors.push_back({static_cast<int>(i), u, face.darts[i]});
        break;
      }
  }
  std::sort(anchors.begin(), anchors.end(),
            [](const Anchor& a, const Anchor& b) { return a.orbit_pos < b.orbit_pos; });

  const VertexId super = g.vertex_count();
  auto arcs = g.arcs();
  auto rots = g.rotations();
  std::vector<ArcId> super_rot;
  for (const Anchor& anchor : anchors) {
    ArcId a = static_cast<ArcId>(arcs.size());
    arcs.push_back({super, anchor.vertex});
    const int at = g.rotation_index(anchor.dep);
    rots[anchor.vertex].insert(rots[anchor.vertex].begin() + at, a);
    super_rot.push_back(a);
  }
  // seen from inside the face the corners pass by clockwise, so the new
  // vertex lists its arcs in the reverse orbit order
  std::reverse(super_rot.begin(), super_rot.end());
  rots.push_back(std::move(super_rot));

  SuperSourceResult out;
  out.graph = PlaneGraph::build(super + 1, std::move(arcs), std::move(rots));
  out.source = super;
  return out;
}

std::optional<PathPair> one_face_candidate(const PlaneGraph& h, const FaceSet& fs, FaceId outer,
                                           VertexId x, VertexId y, VertexId t, Side side,
                                           ArcId skip1, ArcId skip2) {
  auto mid = extremal_path(h, fs, outer, x, y, side);
  if (!mid) return std::nullopt;
  for (ArcId a : mid->arcs)
    if (a == skip1 || a == skip2) throw std::logic_error("simplification arc on a forward path");
  std::vector<char> removed(h.vertex_count(), 0);
  for (VertexId v : mid->vertices) removed[v] = 1;
  removed[y] = 0;
  auto tail = reachable_path(h, y, t, removed);
  if (!tail) return std::nullopt;
  return PathPair{*mid, *tail};
}

std::optional<PathPair> one_face_two_paths(const PlaneGraph& h, const FaceSet& fs, FaceId outer,
                                           VertexId x, VertexId y, VertexId t) {
  auto simp = simplify_outer(h, fs, outer, /*u=*/y, /*v=*/x);
  for (Side side : {Side::left, Side::right}) {
    auto pair = one_face_candidate(simp.graph, simp.faces, simp.outer, x, y, t, side, simp.f1,
                                   simp.f2);
    if (pair) return pair;
  }
  return std::nullopt;
}

DetourResult directed_detour(const PlaneGraph& g, VertexId s, VertexId t, int jobs) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    fail(Errc::bad_argument, "terminal out of range");
  if (s == t) return {Verdict::s_equals_t, std::nullopt};
  const BfsLayers layers = bfs_layers(g, s);
  if (layers.layer_of[t] == kNoLayer) return {Verdict::t_unreachable, std::nullopt};
  const int dist_st = layers.layer_of[t];

  std::vector<VertexId> candidates;
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    const int p = layers.layer_of[y];
    if (p >= 1 && p <= dist_st) candidates.push_back(y);
  }

  auto try_candidate = [&](VertexId y) -> std::optional<DetourWitness> {
    const int p = layers.layer_of[y];
    LayeredSubgraph sub = layered_subgraph(g, layers, p, t);
    const VertexId y_sub = sub.from_original[y];
    if (y_sub == kNoVertex) return std::nullopt;  // y outside t's weak component
    std::vector<VertexId> layer_sub;
    for (VertexId v : layers.layers[p])
      if (sub.from_original[v] != kNoVertex) layer_sub.push_back(sub.from_original[v]);
    if (layer_sub.size() < 2) return std::nullopt;
    const VertexId t_sub = sub.from_original[t];
    // a witness through x = t would repeat t, so t never feeds the super
    // source; y stays in the list because the carrier face must reach it
    std::vector<VertexId> carrier_list;
    for (VertexId v : layer_sub)
      if (v != t_sub || v == y_sub) carrier_list.push_back(v);
    bool has_target = false;
    for (VertexId v : carrier_list) has_target |= v != y_sub;
    if (!has_target) return std::nullopt;

    SuperSourceResult ss = add_super_source(sub.graph, carrier_list, y_sub);
    FaceSet fs = trace_faces(ss.graph);
    FaceId outer = kNoFace;
    for (FaceId f = 0; f < static_cast<FaceId>(fs.faces.size()); ++f) {
      auto mask = face_vertex_mask(ss.graph, fs, f);
      if (mask[ss.source] && mask[y_sub]) {
        outer = f;
        break;
      }
    }
    if (outer == kNoFace) throw std::logic_error("super source severed from y");

    auto pair = one_face_two_paths(ss.graph, fs, outer, ss.source, y_sub, t_sub);
    if (!pair) return std::nullopt;

    // drop the super source, translate back, prepend a shortest s->x path
    const VertexId x_orig = sub.to_original[pair->mid.vertices[1]];
    std::vector<VertexId> path = layers.path_from_source(x_orig);
    for (std::size_t i = 2; i < pair->mid.vertices.size(); ++i)
      path.push_back(sub.to_original[pair->mid.vertices[i]]);
    for (std::size_t i = 1; i < pair->tail.vertices.size(); ++i)
      path.push_back(sub.to_original[pair->tail.vertices[i]]);

    DetourWitness witness{path, static_cast<int>(path.size()) - 1, dist_st};
    auto report = verify_witness(g, s, t, 1, path);
    if (!report.ok) throw std::logic_error("constructed witness failed verification: " + report.reason);
    return witness;
  };

  auto witness = detail::parallel_first(candidates, jobs, try_candidate);
  if (witness) return {Verdict::found, witness};
  return {Verdict::no_detour, std::nullopt};
}

}  // namespace pdg
