#include "pdg/draw.hpp"

#include <cmath>
#include <sstream>

namespace pdg {

std::string render_svg(const PlaneGraph& g, const std::vector<VertexId>& highlight) {
  const VertexId n = g.vertex_count();
  std::vector<double> x(n, 0.0), y(n, 0.0);
  std::vector<char> pinned(n, 0);

  if (g.arc_count() > 0) {
    FaceSet fs = trace_faces(g);
    FaceId outer = 0;
    for (FaceId f = 1; f < static_cast<FaceId>(fs.faces.size()); ++f)
      if (fs.faces[f].darts.size() > fs.faces[outer].darts.size()) outer = f;
    std::vector<VertexId> ring;
    for (DartId d : fs.faces[outer].darts) {
      VertexId v = g.dart_origin(d);
      if (!pinned[v]) {
        pinned[v] = 1;
        ring.push_back(v);
      }
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const double angle = 2.0 * 3.14159265358979 * static_cast<double>(i) /
                           static_cast<double>(ring.size());
      x[ring[i]] = std::cos(angle);
      y[ring[i]] = std::sin(angle);
    }
    for (int round = 0; round < 400; ++round) {
      for (VertexId v = 0; v < n; ++v) {
        if (pinned[v] || g.degree(v) == 0) continue;
        double sx = 0, sy = 0;
        for (ArcId a : g.rotation(v)) {
          VertexId w = g.arc(a).tail == v ? g.arc(a).head : g.arc(a).tail;
          sx += x[w];
          sy += y[w];
        }
        x[v] = sx / g.degree(v);
        y[v] = sy / g.degree(v);
      }
    }
  }

  const double size = 760.0, pad = 40.0;
  double lo_x = 1e9, hi_x = -1e9, lo_y = 1e9, hi_y = -1e9;
  for (VertexId v = 0; v < n; ++v) {
    lo_x = std::min(lo_x, x[v]);
    hi_x = std::max(hi_x, x[v]);
    lo_y = std::min(lo_y, y[v]);
    hi_y = std::max(hi_y, y[v]);
  }
  const double span = std::max(std::max(hi_x - lo_x, hi_y - lo_y), 1e-9);
  auto px = [&](VertexId v) { return pad + (x[v] - lo_x) / span * size; };
  auto py = [&](VertexId v) { return pad + (y[v] - lo_y) / span * size; };

  std::vector<char> on_path(n, 0);
  for (VertexId v : highlight) on_path[v] = 1;
  auto highlighted_arc = [&](ArcId a) {
    for (std::size_t i = 0; i + 1 < highlight.size(); ++i)
      if (g.arc(a).tail == highlight[i] && g.arc(a).head == highlight[i + 1]) return true;
    return false;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"840\" "
         "viewBox=\"0 0 840 840\">\n";
  out << "<defs><marker id=\"m\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"context-stroke\"/></marker></defs>\n";
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& e = g.arc(a);
    // pull parallel arcs slightly apart
    double dx = py(e.head) - py(e.tail), dy = px(e.tail) - px(e.head);
    const double norm = std::max(std::sqrt(dx * dx + dy * dy), 1e-9);
    const double off = 3.0 * (a % 2 == 0 ? 1.0 : -1.0);
    dx = dx / norm * off;
    dy = dy / norm * off;
    const bool hot = highlighted_arc(a);
    out << "<line x1=\"" << px(e.tail) + dx << "\" y1=\"" << py(e.tail) + dy << "\" x2=\""
        << px(e.head) + dx << "\" y2=\"" << py(e.head) + dy << "\" stroke=\""
        << (hot ? "#d62728" : "#888") << "\" stroke-width=\"" << (hot ? 2.5 : 1.2)
        << "\" marker-end=\"url(#m)\"/>\n";
  }
  for (VertexId v = 0; v < n; ++v) {
    out << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"9\" fill=\""
        << (on_path[v] ? "#d62728" : "#1f77b4") << "\"/>\n";
    out << "<text x=\"" << px(v) << "\" y=\"" << py(v) + 4 << "\" font-size=\"10\" fill=\"white\" "
           "text-anchor=\"middle\">"
        << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const PlaneGraph& g, const std::vector<VertexId>& highlight) {
  std::vector<char> on_path(g.vertex_count(), 0);
  for (VertexId v : highlight) on_path[v] = 1;
  std::ostringstream out;
  out << "digraph pdg {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (on_path[v]) out << "  " << v << " [color=red];\n";
  for (ArcId a = 0; a < g.arc_count(); ++a)
    out << "  " << g.arc(a).tail << " -> " << g.arc(a).head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pdg
