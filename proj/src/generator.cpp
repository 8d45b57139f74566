#include "pdg/generator.hpp"

#include <random>
#include <vector>

namespace pdg {

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) fail(Errc::bad_argument, "grid sides must be positive");
  if (spec.keep < 0.0 || spec.keep > 1.0) fail(Errc::bad_argument, "keep must lie in [0, 1]");
  const int rows = spec.rows, cols = spec.cols;
  const bool thinned = spec.kind == GeneratorSpec::Kind::thinned_grid;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto id = [cols](int r, int c) { return static_cast<VertexId>(r * cols + c); };

  std::vector<Arc> arcs;
  // surviving arcs per grid edge; horizontal edge (r,c)-(r,c+1), vertical (r,c)-(r+1,c)
  std::vector<std::vector<std::vector<ArcId>>> horiz(rows,
                                                     std::vector<std::vector<ArcId>>(cols));
  std::vector<std::vector<std::vector<ArcId>>> vert(rows, std::vector<std::vector<ArcId>>(cols));

  auto lay_edge = [&](VertexId a, VertexId b, std::vector<ArcId>& slot) {
    std::vector<std::pair<VertexId, VertexId>> dirs;
    switch (spec.orient) {
      case GeneratorSpec::Orient::right_down: dirs = {{a, b}}; break;
      case GeneratorSpec::Orient::random:
        dirs = (rng() & 1u) ? std::vector<std::pair<VertexId, VertexId>>{{a, b}}
                            : std::vector<std::pair<VertexId, VertexId>>{{b, a}};
        break;
      case GeneratorSpec::Orient::bidirected: dirs = {{a, b}, {b, a}}; break;
    }
    for (auto [tail, head] : dirs) {
      const bool kept = !thinned || unit(rng) < spec.keep;
      if (!kept) continue;
      slot.push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back({tail, head});
    }
  };

  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) lay_edge(id(r, c), id(r, c + 1), horiz[r][c]);
      if (r + 1 < rows) lay_edge(id(r, c), id(r + 1, c), vert[r][c]);
    }
  if (rows * cols > 1 && arcs.empty())
    fail(Errc::empty_after_thinning, "thinning removed every arc");

  // rotations: direction slots east, north, west, south in anti-clockwise
  // order; an antiparallel pair lists the incoming arc first so the two
  // arcs bound their own two-sided face
  std::vector<std::vector<ArcId>> rots(static_cast<std::size_t>(rows) * cols);
  auto add_slot = [&](VertexId v, const std::vector<ArcId>& slot) {
    ArcId in = kNoArc, out = kNoArc;
    for (ArcId a : slot) (arcs[a].tail == v ? out : in) = a;
    if (in != kNoArc) rots[v].push_back(in);
    if (out != kNoArc) rots[v].push_back(out);
  };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const VertexId v = id(r, c);
      if (c + 1 < cols) add_slot(v, horiz[r][c]);      // east
      if (r > 0) add_slot(v, vert[r - 1][c]);          // north
      if (c > 0) add_slot(v, horiz[r][c - 1]);         // west
      if (r + 1 < rows) add_slot(v, vert[r][c]);       // south
    }

  GeneratedInstance out;
  out.graph = PlaneGraph::build(static_cast<VertexId>(rows) * cols, std::move(arcs),
                                std::move(rots));
  out.s = 0;
  out.t = static_cast<VertexId>(rows * cols - 1);
  return out;
}

}  // namespace pdg
