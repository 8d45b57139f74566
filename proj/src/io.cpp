#include "pdg/io.hpp"

#include <fstream>
#include <sstream>

namespace pdg {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

PlaneGraph parse_pdg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  VertexId n = -1;
  ArcId m = -1;
  std::vector<Arc> arcs;
  std::vector<char> arc_seen;
  std::vector<std::vector<ArcId>> rots;
  std::vector<char> rot_seen;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "pdg") {
      int version = -1;
      if (!(ls >> version) || version != 1) parse_fail(line_no, "unsupported format version");
      saw_header = true;
    } else if (word == "n") {
      if (!saw_header) parse_fail(line_no, "missing pdg header");
      if (!(ls >> n) || n < 0) parse_fail(line_no, "bad vertex count");
      rots.assign(n, {});
      rot_seen.assign(n, 0);
    } else if (word == "arcs") {
      if (n < 0) parse_fail(line_no, "arc count before vertex count");
      if (!(ls >> m) || m < 0) parse_fail(line_no, "bad arc count");
      arcs.assign(m, {});
      arc_seen.assign(m, 0);
    } else if (word == "a") {
      ArcId id;
      VertexId tail, head;
      if (m < 0) parse_fail(line_no, "arc before the arcs directive");
      if (!(ls >> id >> tail >> head)) parse_fail(line_no, "malformed arc directive");
      if (id < 0 || id >= m) parse_fail(line_no, "arc id out of range");
      if (arc_seen[id]) parse_fail(line_no, "duplicate arc id " + std::to_string(id));
      arc_seen[id] = 1;
      arcs[id] = {tail, head};
    } else if (word == "rot") {
      VertexId v;
      if (n < 0) parse_fail(line_no, "rotation before the vertex count");
      if (!(ls >> v)) parse_fail(line_no, "malformed rotation directive");
      if (v < 0 || v >= n) parse_fail(line_no, "rotation vertex out of range");
      if (rot_seen[v]) parse_fail(line_no, "duplicate rotation for vertex " + std::to_string(v));
      rot_seen[v] = 1;
      ArcId a;
      while (ls >> a) rots[v].push_back(a);
      if (!ls.eof()) parse_fail(line_no, "malformed rotation entry");
    } else {
      parse_fail(line_no, "unknown directive '" + word + "'");
    }
  }
  if (!saw_header) fail(Errc::parse_error, "missing pdg header");
  if (n < 0) fail(Errc::parse_error, "missing vertex count");
  if (m < 0) fail(Errc::parse_error, "missing arc count");
  for (ArcId a = 0; a < m; ++a)
    if (!arc_seen[a]) fail(Errc::parse_error, "arc " + std::to_string(a) + " never defined");
  return PlaneGraph::build(n, std::move(arcs), std::move(rots));
}

PlaneGraph parse_pdg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pdg(buffer.str());
}

std::string emit_pdg(const PlaneGraph& g) {
  std::ostringstream out;
  out << "pdg 1\n";
  out << "n " << g.vertex_count() << "\n";
  out << "arcs " << g.arc_count() << "\n";
  for (ArcId a = 0; a < g.arc_count(); ++a)
    out << "a " << a << " " << g.arc(a).tail << " " << g.arc(a).head << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v;
    for (ArcId a : g.rotation(v)) out << " " << a;
    out << "\n";
  }
  return out.str();
}

void write_pdg_file(const std::string& path, const PlaneGraph& g) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << emit_pdg(g);
}

}  // namespace pdg
