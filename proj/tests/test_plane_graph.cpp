#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "pdg/oracle.hpp"
#include "pdg/plane_graph.hpp"

using namespace pdg;

TEST_CASE("triangle traces two faces of length three") {
  PlaneGraph g = fixtures::triangle();
  FaceSet fs = trace_faces(g);
  REQUIRE(fs.faces.size() == 2);
  CHECK(fs.faces[0].darts.size() == 3);
  CHECK(fs.faces[1].darts.size() == 3);
  CHECK(fs.faces[0].is_simple);
  helpers::check_embedding(g);
}

TEST_CASE("a single arc bounds one face of length two") {
  PlaneGraph g = fixtures::single_arc();
  FaceSet fs = trace_faces(g);
  REQUIRE(fs.faces.size() == 1);
  CHECK(fs.faces[0].darts.size() == 2);
}

TEST_CASE("a two-arc path bounds one face of length four") {
  FaceSet fs = trace_faces(fixtures::path3());
  REQUIRE(fs.faces.size() == 1);
  CHECK(fs.faces[0].darts.size() == 4);
}

TEST_CASE("diamond traces three faces") {
  FaceSet fs = trace_faces(fixtures::diamond());
  CHECK(fs.faces.size() == 3);
  helpers::check_embedding(fixtures::diamond());
}

TEST_CASE("rotation omitting an incident arc is rejected") {
  CHECK_THROWS_WITH_AS(PlaneGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {1}, {1, 2}}),
                       doctest::Contains("missing"), Error);
  CHECK_THROWS_AS(PlaneGraph::build(2, {{0, 0}}, {{0}, {}}), Error);
  CHECK_THROWS_AS(PlaneGraph::build(3, {{0, 1}}, {{0}, {0}, {0}}), Error);
}

TEST_CASE("bfs layers on the diamond") {
  BfsLayers layers = bfs_layers(fixtures::diamond(), 0);
  CHECK(layers.layer_of == std::vector<int>{0, 1, 1, 2});
  REQUIRE(layers.layers.size() == 3);
  CHECK(layers.layers[1] == std::vector<VertexId>{1, 2});
  CHECK(layers.path_from_source(3).size() == 3);
}

TEST_CASE("bfs marks vertices the source cannot reach") {
  // t=2 has no incoming arcs
  PlaneGraph g = PlaneGraph::build(3, {{0, 1}, {2, 1}}, {{0}, {0, 1}, {1}});
  BfsLayers layers = bfs_layers(g, 0);
  CHECK(layers.layer_of[2] == kNoLayer);
}

TEST_CASE("grid layers equal the brute-force shortest paths") {
  auto inst = generate_instance({GeneratorSpec::Kind::grid, 3, 3,
                                 GeneratorSpec::Orient::right_down, 1.0, 0});
  BfsLayers layers = bfs_layers(inst.graph, 0);
  for (VertexId v = 0; v < 9; ++v) {
    int best = INT32_MAX;
    for (const GroundedPath& p : enumerate_simple_paths(inst.graph, 0, v))
      best = std::min(best, p.length());
    REQUIRE(best == layers.layer_of[v]);  // independent enumeration oracle
    CHECK(layers.layer_of[v] == v / 3 + v % 3);
  }
}

TEST_CASE("bfs arc slack holds on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = fixtures::random_instance(seed);
    BfsLayers layers = bfs_layers(inst.graph, inst.s);
    for (ArcId a = 0; a < inst.graph.arc_count(); ++a) {
      const Arc& e = inst.graph.arc(a);
      if (layers.layer_of[e.tail] != kNoLayer && layers.layer_of[e.head] != kNoLayer)
        CHECK(layers.layer_of[e.head] <= layers.layer_of[e.tail] + 1);
    }
  }
}

TEST_CASE("layered subgraph of the diamond keeps the far side") {
  PlaneGraph g = fixtures::diamond();
  BfsLayers layers = bfs_layers(g, 0);
  LayeredSubgraph sub = layered_subgraph(g, layers, 1, 3);
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.arc_count() == 3);
  CHECK(sub.from_original[0] == kNoVertex);
  CHECK(sub.from_original[3] != kNoVertex);
  helpers::check_embedding(sub.graph);
}

TEST_CASE("layered subgraph discards components severed from the keep vertex") {
  // 0 -> 1 (stranded blob), 0 -> 2 -> 3; deleting layer 0 separates 1
  PlaneGraph g =
      PlaneGraph::build(4, {{0, 1}, {0, 2}, {2, 3}}, {{0, 1}, {0}, {1, 2}, {2}});
  BfsLayers layers = bfs_layers(g, 0);
  LayeredSubgraph sub = layered_subgraph(g, layers, 1, 3);
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.from_original[1] == kNoVertex);
}

TEST_CASE("layered subgraph rejects a deleted keep vertex") {
  PlaneGraph g = fixtures::diamond();
  BfsLayers layers = bfs_layers(g, 0);
  CHECK_THROWS_AS(layered_subgraph(g, layers, 3, 3), Error);
}

TEST_CASE("claim: every surviving layer lies on one face") {
  int instances = 0;
  for (std::uint64_t seed = 0; seed < 120 && instances < 60; ++seed) {
    auto inst = fixtures::random_instance(seed);
    BfsLayers layers = bfs_layers(inst.graph, inst.s);
    if (layers.layer_of[inst.t] == kNoLayer) continue;
    ++instances;
    for (int p = 1; p <= layers.layer_of[inst.t]; ++p) {
      LayeredSubgraph sub = layered_subgraph(inst.graph, layers, p, inst.t);
      std::vector<VertexId> surviving;
      for (VertexId v : layers.layers[p])
        if (sub.from_original[v] != kNoVertex) surviving.push_back(sub.from_original[v]);
      if (surviving.empty()) continue;
      FaceSet fs = trace_faces(sub.graph);
      CHECK(face_containing_all(sub.graph, fs, surviving).has_value());
    }
  }
  CHECK(instances >= 40);
}

TEST_CASE("embedding invariants hold on generated instances and subgraphs") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    auto inst = fixtures::random_instance(seed);
    helpers::check_embedding(inst.graph);
    BfsLayers layers = bfs_layers(inst.graph, inst.s);
    if (layers.layer_of[inst.t] == kNoLayer || layers.layer_of[inst.t] < 1) continue;
    LayeredSubgraph sub = layered_subgraph(inst.graph, layers, 1, inst.t);
    helpers::check_embedding(sub.graph);
  }
}

TEST_CASE("mirrored embeddings keep the face census") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = fixtures::random_instance(seed);
    FaceSet fs = trace_faces(inst.graph);
    FaceSet mirrored = trace_faces(inst.graph.mirrored());
    CHECK(fs.faces.size() == mirrored.faces.size());
  }
}
