#include "oracles.hpp"

#include <goldenflow/canonical.hpp>
#include <goldenflow/cubic_gen.hpp>
#include <goldenflow/diagram_build.hpp>
#include <goldenflow/fixtures.hpp>
#include <goldenflow/graph6.hpp>
#include <goldenflow/planarity.hpp>

#include <doctest.h>

#include <set>

using namespace gf;

TEST_CASE("multigraph basics") {
  MultiGraph g = fixtures::theta();
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.is_cubic());
  CHECK(g.is_bridgeless());
  CHECK_FALSE(g.is_simple());
  CHECK(g.cyclomatic_number() == 2);
  MultiGraph d = fixtures::dumbbell();
  CHECK(d.loop_count() == 2);
  CHECK(d.bridges().size() == 1);
  CHECK(d.contract(d.bridges()[0]).vertex_count() == 1);
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), std::invalid_argument);
  MultiGraph u = fixtures::k4().disjoint_union(fixtures::cycle(3));
  CHECK(u.components() == 2);
  CHECK(u.vertex_count() == 7);
}

TEST_CASE("fixtures have the expected invariants") {
  struct Row {
    const char* name;
    int v, e;
    bool planar;
  };
  for (auto r : {Row{"k4", 4, 6, true}, Row{"k33", 6, 9, false}, Row{"k5", 5, 10, false},
                 Row{"petersen", 10, 15, false}, Row{"cube", 8, 12, true}, Row{"prism", 6, 9, true},
                 Row{"octahedron", 6, 12, true}, Row{"blanusa", 18, 27, false}}) {
    CAPTURE(r.name);
    MultiGraph g = fixtures::by_name(r.name);
    CHECK(g.vertex_count() == r.v);
    CHECK(g.edge_count() == r.e);
    CHECK(is_planar(g) == r.planar);
    CHECK(planar_rotation(g).has_value() == r.planar);
  }
  CHECK_THROWS_AS(fixtures::by_name("nonexistent"), std::invalid_argument);
}

TEST_CASE("planar rotations satisfy Euler's formula") {
  for (const char* name : {"k4", "cube", "prism", "octahedron", "theta", "dumbbell"}) {
    CAPTURE(name);
    MultiGraph g = fixtures::by_name(name);
    auto rot = planar_rotation(g);
    REQUIRE(rot.has_value());
    CHECK(g.vertex_count() - g.edge_count() + rotation_face_count(g, *rot) == 1 + g.components());
  }
}

TEST_CASE("canonical keys are relabelling invariant and separate non-isomorphic graphs") {
  std::mt19937_64 rng(19);
  for (const auto& name : fixtures::names()) {
    MultiGraph g = fixtures::by_name(name);
    for (int t = 0; t < 5; ++t) CHECK(canonical_key(oracle::shuffle(g, rng)) == canonical_key(g));
  }
  CHECK(canonical_key(fixtures::k33()) != canonical_key(fixtures::prism()));
  CHECK(canonical_key(fixtures::cube()) != canonical_key(fixtures::by_name("k4").disjoint_union(fixtures::k4())));
  MultiGraph p = fixtures::path(2);
  CHECK(canonical_key(p, {0, 1, 0}) != canonical_key(p, {1, 0, 0}));
  CHECK(canonical_key(p, {1, 0, 0}) == canonical_key(p, {0, 0, 1}));
}

TEST_CASE("graph6 and sparse6 round trips") {
  std::mt19937_64 rng(23);
  for (const char* name : {"k4", "petersen", "cube", "k33", "blanusa"}) {
    MultiGraph g = fixtures::by_name(name);
    CHECK(canonical_key(parse_graph6(write_graph6(g))) == canonical_key(g));
    CHECK(canonical_key(parse_graph_line(write_sparse6(g))) == canonical_key(g));
  }
  CHECK(parse_graph6("C~").edge_count() == 6);  // K4
  CHECK(parse_graph_line(">>graph6<<C~").edge_count() == 6);
  for (int t = 0; t < 20; ++t) {
    MultiGraph g = oracle::random_graph(rng, 5, 9);
    CHECK(canonical_key(parse_sparse6(write_sparse6(g))) == canonical_key(g));
  }
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(write_graph6(fixtures::theta()), std::invalid_argument);
}

TEST_CASE("cubic graph counts") {
  // Connected cubic simple graphs: 1, 2, 5, 19, 85 for 4 .. 12 vertices.
  const int expected[] = {1, 2, 5, 19, 85};
  for (int i = 0; i < 5; ++i) {
    auto graphs = generate_cubic_graphs(4 + 2 * i, false);
    CHECK(graphs.size() == static_cast<std::size_t>(expected[i]));
    std::set<std::string> keys;
    for (const auto& g : graphs) {
      CHECK(g.is_cubic());
      CHECK(g.is_simple());
      CHECK(g.is_connected());
      keys.insert(canonical_key(g));
    }
    CHECK(keys.size() == graphs.size());
  }
  // With loops and parallel edges: 2 on 2 vertices, 5 on 4 vertices.
  CHECK(generate_cubic_graphs(2, true).size() == 2);
  CHECK(generate_cubic_graphs(4, true).size() == 5);
  CHECK_THROWS(generate_cubic_graphs(5, false));
}

TEST_CASE("connected multigraphs by edge count") {
  // One loop, or a single edge.
  CHECK(generate_connected_multigraphs(1).size() == 2);
  auto two = generate_connected_multigraphs(2);
  // two loops; loop + pendant edge (loop at either end is the same); path; digon.
  CHECK(two.size() == 4);
  for (const auto& g : generate_connected_multigraphs(4)) {
    CHECK(g.is_connected());
    CHECK(g.edge_count() == 4);
  }
}

TEST_CASE("diagrams from rotations are plane and draw the graph") {
  for (const char* name : {"k4", "cube", "prism", "octahedron", "theta", "dumbbell", "loop"}) {
    CAPTURE(name);
    MultiGraph g = fixtures::by_name(name);
    auto d = planar_diagram(g);
    REQUIRE(d.has_value());
    CHECK(d->crossing_count() == 0);
    CHECK(d->is_plane());
    CHECK(canonical_key(d->underlying_graph()) == canonical_key(g));
  }
  CHECK_FALSE(planar_diagram(fixtures::k33()).has_value());
}

TEST_CASE("circle drawings of non-planar graphs") {
  struct Row {
    const char* name;
    int crossings;
  };
  for (auto r : {Row{"k4", 1}, Row{"k33", 9}, Row{"petersen", 25}, Row{"cube", 12}, Row{"prism", 5}}) {
    CAPTURE(r.name);
    MultiGraph g = fixtures::by_name(r.name);
    PlanarDiagram d = circle_diagram(g);
    CHECK(d.crossing_count() == r.crossings);
    CHECK(d.is_plane());
    CHECK(canonical_key(d.underlying_graph()) == canonical_key(g));
  }
}

TEST_CASE("diagram moves keep the diagram plane") {
  PlanarDiagram t = braid_closure(2, {1, 1, 1});
  CHECK(t.crossing_count() == 3);
  CHECK(t.is_plane());
  CHECK(t.mirror().crossing_count() == 3);
  for (const auto& site : r2_sites(t)) {
    PlanarDiagram r = reidemeister2(t, site);
    CHECK(r.crossing_count() == 5);
    CHECK(r.is_plane());
  }
  auto chords = chord_diagrams(t);
  CHECK_FALSE(chords.empty());
  for (const auto& c : chords) {
    CHECK(c.is_plane());
    CHECK(c.trivalent_count() == 2);
  }
  PlanarDiagram b = braid_closure(3, {1, -2, 1});
  for (int h : r3_sites(b)) {
    PlanarDiagram r = reidemeister3(b, h);
    CHECK(r.crossing_count() == 3);
    CHECK(r.is_plane());
  }
  CHECK(PlanarDiagram::from_json(t.to_json()) == t);
}
