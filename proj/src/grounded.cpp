#include "pdg/grounded.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdg {

bool path_vertices_distinct(const std::vector<VertexId>& vertices) {
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GroundedPath concat_paths(const GroundedPath& a, const GroundedPath& b) {
  if (a.destination() != b.origin()) fail(Errc::bad_argument, "paths do not chain");
  GroundedPath out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  out.arcs.insert(out.arcs.end(), b.arcs.begin(), b.arcs.end());
  return out;
}

std::optional<GroundedPath> reachable_path(const PlaneGraph& g, VertexId from, VertexId to,
                                           const std::vector<char>& removed) {
  if (removed[from] || removed[to]) return std::nullopt;
  if (from == to) return GroundedPath{{from}, {}};
  std::vector<ArcId> via(g.vertex_count(), kNoArc);
  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<VertexId> stack{from};
  visited[from] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.out_arcs(v)) {
      VertexId w = g.arc(a).head;
      if (visited[w] || removed[w]) continue;
      visited[w] = 1;
      via[w] = a;
      if (w == to) {
        GroundedPath path;
        VertexId cur = to;
        while (cur != from) {
          path.vertices.push_back(cur);
          path.arcs.push_back(via[cur]);
          cur = g.arc(via[cur]).tail;
        }
        path.vertices.push_back(from);
        std::reverse(path.vertices.begin(), path.vertices.end());
        std::reverse(path.arcs.begin(), path.arcs.end());
        return path;
      }
      stack.push_back(w);
    }
  }
  return std::nullopt;
}

namespace {

// Orbit position of the first dart originating at v, or -1.
int orbit_position_of(const PlaneGraph& g, const Face& face, VertexId v) {
  for (std::size_t i = 0; i < face.darts.size(); ++i)
    if (g.dart_origin(face.darts[i]) == v) return static_cast<int>(i);
  return -1;
}

}  // namespace

Simplification simplify_outer(const PlaneGraph& g, const FaceSet& fs, FaceId outer, VertexId u,
                              VertexId v) {
  if (outer < 0 || outer >= static_cast<FaceId>(fs.faces.size()))
    fail(Errc::bad_argument, "no such face");
  if (u == v) fail(Errc::not_on_outer_face, "simplification endpoints must be distinct");
  const Face& face = fs.faces[outer];
  const int iu = orbit_position_of(g, face, u);
  const int iv = orbit_position_of(g, face, v);
  if (iu < 0) fail(Errc::not_on_outer_face, "vertex " + std::to_string(u) + " not on the face");
  if (iv < 0) fail(Errc::not_on_outer_face, "vertex " + std::to_string(v) + " not on the face");

  const ArcId f1 = g.arc_count();
  const ArcId f2 = f1 + 1;
  auto arcs = g.arcs();
  arcs.push_back({u, v});
  arcs.push_back({u, v});
  auto rots = g.rotations();
  // Each new arc enters the corner just before the face's departure dart;
  // the orders below make {f1 tail-side, f2 head-side} the new outer orbit.
  const int at_u = g.rotation_index(face.darts[iu]);
  rots[u].insert(rots[u].begin() + at_u, {f2, f1});
  const int at_v = g.rotation_index(face.darts[iv]);
  rots[v].insert(rots[v].begin() + at_v, {f1, f2});

  Simplification out;
  out.graph = PlaneGraph::build(g.vertex_count(), std::move(arcs), std::move(rots));
  out.faces = trace_faces(out.graph);
  out.outer = out.faces.face_of_dart[make_dart(f1, 0)];
  out.f1 = f1;
  out.f2 = f2;
  if (out.faces.faces[out.outer].darts.size() != 2)
    throw std::logic_error("simplification did not produce a two-arc outer face");
  return out;
}

namespace {

bool vertex_allowed(const std::vector<char>* allowed, VertexId v) {
  return allowed == nullptr || (*allowed)[v];
}

// Leftmost DFS. At every vertex the out-darts are tried in clockwise order
// starting just after the reference position: the reversed entry arc at
// interior vertices, the outer-face departure dart at the origin (so the
// boundary departure is tried last, realising the virtual entry from
// outside the outer face).
std::optional<GroundedPath> leftmost_path(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                                          VertexId v, VertexId w,
                                          const std::vector<char>* allowed) {
  if (!fs.faces[outer].is_simple) fail(Errc::bad_argument, "outer face must be simple");
  if (!vertex_allowed(allowed, v) || !vertex_allowed(allowed, w)) return std::nullopt;
  if (v == w) return GroundedPath{{v}, {}};
  const int start = orbit_position_of(g, fs.faces[outer], v);
  if (start < 0) fail(Errc::not_grounded, "path origin not on the outer face");

  struct Frame {
    VertexId vertex;
    int ref;   // rotation index the clockwise sweep pivots on
    int step;  // sweep steps taken so far
    ArcId via;
  };
  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<Frame> stack;
  stack.push_back({v, g.rotation_index(fs.faces[outer].darts[start]), 0, kNoArc});
  visited[v] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& rot = g.rotation(f.vertex);
    const int deg = static_cast<int>(rot.size());
    if (f.step == deg) {
      stack.pop_back();
      continue;
    }
    ++f.step;
    int idx = (f.ref - f.step) % deg;
    if (idx < 0) idx += deg;
    const ArcId a = rot[idx];
    if (g.arc(a).tail != f.vertex) continue;  // not traversable from here
    const VertexId next = g.arc(a).head;
    if (visited[next] || !vertex_allowed(allowed, next)) continue;
    if (next == w) {
      GroundedPath path;
      path.vertices.reserve(stack.size() + 1);
      for (const Frame& fr : stack) path.vertices.push_back(fr.vertex);
      path.vertices.push_back(w);
      for (std::size_t i = 1; i < stack.size(); ++i) path.arcs.push_back(stack[i].via);
      path.arcs.push_back(a);
      return path;
    }
    visited[next] = 1;
    stack.push_back({next, g.rotation_index(make_dart(a, 1)), 0, a});
  }
  return std::nullopt;
}

}  // namespace

std::optional<GroundedPath> extremal_path(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                                          VertexId v, VertexId w, Side side,
                                          const std::vector<char>* allowed) {
  if (side == Side::left) return leftmost_path(g, fs, outer, v, w, allowed);
  // Rightmost = leftmost on the mirrored rotation system; arc ids carry over.
  PlaneGraph m = g.mirrored();
  FaceSet mf = trace_faces(m);
  FaceId mouter = mf.face_of_dart[dart_rev(fs.faces[outer].darts.front())];
  return leftmost_path(m, mf, mouter, v, w, allowed);
}

namespace {

// One cut step: split vertex u along cut_arc. The vertex keeps its id for
// the copy owning the boundary-departure side; the other copy and the
// duplicated arc are appended. Returns (appended vertex id, duplicated arc).
std::pair<VertexId, ArcId> cut_one_arc(PlaneGraph& g, FaceSet& fs, FaceId& outer, VertexId u,
                                       ArcId cut_arc) {
  const Face& face = fs.faces[outer];
  const int pos = orbit_position_of(g, face, u);
  if (pos < 0) fail(Errc::not_grounded, "cut vertex not on the outer face");
  const DartId dep = face.darts[pos];

  // linearise u's rotation anti-clockwise from the departure arc
  const auto& rot = g.rotation(u);
  const int deg = static_cast<int>(rot.size());
  const int dep_idx = g.rotation_index(dep);
  std::vector<ArcId> line(deg);
  for (int i = 0; i < deg; ++i) line[i] = rot[(dep_idx + i) % deg];
  int cut_pos = -1;
  for (int i = 0; i < deg; ++i)
    if (line[i] == cut_arc) cut_pos = i;
  if (cut_pos <= 0 || cut_pos >= deg - 1)
    throw std::logic_error("cut arc is not interior at the split vertex");

  const VertexId u2 = g.vertex_count();
  const ArcId dup = g.arc_count();
  const Arc old_arc = g.arc(cut_arc);
  const VertexId other = old_arc.tail == u ? old_arc.head : old_arc.tail;

  auto arcs = g.arcs();
  for (int i = cut_pos + 1; i < deg; ++i) {
    Arc& e = arcs[line[i]];
    (e.tail == u ? e.tail : e.head) = u2;
  }
  Arc dup_arc = old_arc;
  (dup_arc.tail == u ? dup_arc.tail : dup_arc.head) = u2;
  arcs.push_back(dup_arc);

  auto rots = g.rotations();
  rots[u].assign(line.begin(), line.begin() + cut_pos + 1);
  std::vector<ArcId> rot2{dup};
  rot2.insert(rot2.end(), line.begin() + cut_pos + 1, line.end());
  rots.push_back(std::move(rot2));
  // at the far endpoint the cut arc becomes two parallel entries, the copy
  // attached to the appended vertex first in anti-clockwise order
  auto& rot_other = rots[other];
  auto it = std::find(rot_other.begin(), rot_other.end(), cut_arc);
  rot_other.insert(it, dup);

  g = PlaneGraph::build(u2 + 1, std::move(arcs), std::move(rots));
  fs = trace_faces(g);
  outer = fs.face_of_dart[g.dart_at(u2, dup)];
  return {u2, dup};
}

}  // namespace

CutResult cut_along_path(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                         const GroundedPath& path) {
  if (path.length() < 1) fail(Errc::bad_argument, "cut path must contain an arc");
  auto boundary = face_vertex_mask(g, fs, outer);
  if (!boundary[path.origin()]) fail(Errc::not_grounded, "cut path origin not on the outer face");
  for (std::size_t i = 1; i < path.vertices.size(); ++i)
    if (boundary[path.vertices[i]])
      fail(Errc::path_touches_boundary,
           "cut path revisits the outer face at vertex " + std::to_string(path.vertices[i]));
  if (!fs.faces[outer].is_simple) fail(Errc::bad_argument, "outer face must be simple");

  CutResult out;
  out.graph = g;
  out.faces = fs;
  out.outer = outer;
  out.lineage.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.lineage[v] = v;
  out.arc_lineage.resize(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) out.arc_lineage[a] = a;

  for (int i = 0; i < path.length(); ++i) {
    const VertexId u = path.vertices[i];
    auto [u2, dup] = cut_one_arc(out.graph, out.faces, out.outer, u, path.arcs[i]);
    out.lineage.push_back(out.lineage[u]);
    out.arc_lineage.push_back(out.arc_lineage[path.arcs[i]]);
    out.new_boundary.push_back(u);
    out.new_boundary.push_back(u2);
  }
  if (!out.faces.faces[out.outer].is_simple)
    throw std::logic_error("cutting left a non-simple outer face");
  return out;
}

AreaSplit left_right_areas(const PlaneGraph& g, const FaceSet& fs, FaceId outer,
                           const GroundedPath& path) {
  const Face& face = fs.faces[outer];
  if (!face.is_simple) fail(Errc::bad_argument, "outer face must be simple");
  const VertexId v = path.origin();
  const VertexId w = path.destination();
  const int pv = orbit_position_of(g, face, v);
  const int pw = orbit_position_of(g, face, w);
  if (pv < 0 || pw < 0) fail(Errc::not_grounded, "path endpoints must lie on the outer face");

  const int len = static_cast<int>(face.darts.size());
  std::vector<DartId> seg_wv, seg_vw;
  for (int i = pw; i != pv; i = (i + 1) % len) seg_wv.push_back(face.darts[i]);
  for (int i = pv; i != pw; i = (i + 1) % len) seg_vw.push_back(face.darts[i]);
  if (v == w) {  // trivial path: the whole boundary walk closes the left area
    seg_wv.assign(face.darts.begin(), face.darts.end());
    seg_vw.clear();
  }

  // One side of the split: faces immediately on that side of the path, plus
  // the inward faces of the closing boundary segment, flooded across every
  // arc off the closed walk. The unbounded outer region never joins an area.
  auto collect = [&](const std::vector<DartId>& boundary_seg, bool left_of_path) {
    std::vector<char> arc_blocked(g.arc_count(), 0);
    for (ArcId a : path.arcs) arc_blocked[a] = 1;
    for (DartId d : boundary_seg) arc_blocked[dart_arc(d)] = 1;
    std::vector<char> in(fs.faces.size(), 0);
    std::vector<FaceId> stack;
    auto seed = [&](FaceId f) {
      if (f != outer && !in[f]) {
        in[f] = 1;
        stack.push_back(f);
      }
    };
    for (ArcId a : path.arcs) {
      DartId d = make_dart(a, 0);
      seed(fs.face_of_dart[left_of_path ? dart_rev(d) : d]);
    }
    for (DartId d : boundary_seg) seed(fs.face_of_dart[dart_rev(d)]);
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      for (DartId d : fs.faces[f].darts)
        if (!arc_blocked[dart_arc(d)]) seed(fs.face_of_dart[dart_rev(d)]);
    }
    std::vector<char> verts(g.vertex_count(), 0);
    for (FaceId f = 0; f < static_cast<FaceId>(fs.faces.size()); ++f)
      if (in[f])
        for (DartId d : fs.faces[f].darts) verts[g.dart_origin(d)] = 1;
    for (VertexId u : path.vertices) verts[u] = 1;
    for (DartId d : boundary_seg) {
      verts[g.dart_origin(d)] = 1;
      verts[g.dart_target(d)] = 1;
    }
    return verts;
  };

  AreaSplit out;
  out.left = collect(seg_wv, true);
  out.right = collect(seg_vw, false);
  return out;
}

}  // namespace pdg
