#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cliquedyn/graph.hpp"
#include "test_util.hpp"

using namespace cliquedyn;
using namespace testutil;

TEST_CASE("construction normalizes names and adjacency") {
  Graph g = Graph::from_edges({"z", "a"}, {{"b", "a"}, {"a", "b"}, {"b", "c"}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.name(0) == "a");
  CHECK(g.name(3) == "z");
  CHECK(g.adjacent(g.require_index("a"), g.require_index("b")));
  CHECK_FALSE(g.adjacent(g.require_index("a"), g.require_index("c")));
  CHECK(g.degree(g.require_index("z")) == 0);
  auto nb = g.neighbors(g.require_index("b"));
  CHECK(std::vector<int>(nb.begin(), nb.end()) ==
        std::vector<int>{g.require_index("a"), g.require_index("c")});
  CHECK(g.index_of("missing") == std::nullopt);
  CHECK_THROWS_AS(g.require_index("missing"), std::invalid_argument);
}

TEST_CASE("self-loops are rejected") {
  CHECK_THROWS_WITH_AS(Graph::from_edges({}, {{"u", "u"}}), "self-loop on vertex 'u'",
                       std::invalid_argument);
}

TEST_CASE("edges come out sorted") {
  Graph g = cycle(4);
  auto e = g.edges();
  CHECK(e.size() == 4);
  CHECK(std::is_sorted(e.begin(), e.end()));
  for (auto [u, v] : e) CHECK(u < v);
}

TEST_CASE("induced subgraphs keep names") {
  Graph g = complete(4);
  Graph h = induced_by_names(g, {"k000", "k001", "k003"});
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 3);
  CHECK(h.name(2) == "k003");
  std::vector<int> keep{0, 1};
  Graph p = induced(g, keep);
  CHECK(p.vertex_count() == 2);
  CHECK(p.edge_count() == 1);
}

TEST_CASE("girth") {
  CHECK(girth(cycle(5)) == GirthValue::finite(5));
  CHECK(girth(complete(4)) == GirthValue::finite(3));
  CHECK(girth(path(6)).is_infinite());
  CHECK(girth(star(5)).is_infinite());
  CHECK(girth(Graph{}).is_infinite());
  CHECK(girth(cube()) == GirthValue::finite(4));
  CHECK(girth(petersen()) == GirthValue::finite(5));
}

TEST_CASE("neighborhood graphs and local invariants") {
  Graph octa = octahedron();
  for (int v = 0; v < octa.vertex_count(); ++v) {
    Graph nb = neighborhood_graph(octa, v);
    CHECK(nb.vertex_count() == 4);
    CHECK(girth(nb) == GirthValue::finite(4));
  }
  CHECK(local_girth(octa) == GirthValue::finite(4));
  CHECK(local_min_degree(octa) == 2);
  CHECK(is_locally_cyclic(octa));

  Graph ico = icosahedron();
  CHECK(ico.vertex_count() == 12);
  CHECK(ico.edge_count() == 30);
  CHECK(local_girth(ico) == GirthValue::finite(5));
  CHECK(is_locally_cyclic(ico));

  CHECK(local_girth(complete(4)) == GirthValue::finite(3));
  CHECK(is_locally_cyclic(complete(4)));  // each neighborhood is a triangle
  CHECK_FALSE(is_locally_cyclic(cube()));
  CHECK_FALSE(is_locally_cyclic(petersen()));
  CHECK(local_girth(path(4)).is_infinite());
  CHECK(local_min_degree(path(4)) == 0);
}

TEST_CASE("degree-one pruning is simultaneous") {
  Graph p = prune_degree_one(path(4));
  CHECK(p.vertex_count() == 2);
  CHECK(p.edge_count() == 1);
  CHECK(p.name(0) == "p001");

  // all leaves of a star go at once, leaving the hub
  Graph s = prune_degree_one(star(5));
  CHECK(s.vertex_count() == 1);
  CHECK(s.name(0) == "hub");

  CHECK(prune_degree_one(cycle(5)) == cycle(5));
  CHECK(prune_degree_one(path(2)).vertex_count() == 0);
}

TEST_CASE("bfs distances") {
  Graph c = cycle(6);
  auto d = bfs_distances(c, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, 2, 1});
  Graph two = disjoint_union(path(2), path(2));
  auto dd = bfs_distances(two, 0);
  CHECK(dd[0] == 0);
  CHECK(std::count(dd.begin(), dd.end(), -1) == 2);
}

TEST_CASE("components and connectivity") {
  CHECK(is_connected(cycle(7)));
  Graph u = disjoint_union(cycle(3), path(2));
  CHECK_FALSE(is_connected(u));
  auto comps = components(u);
  CHECK(comps.size() == 2);
  CHECK(comps[0].size() + comps[1].size() == 5);
  CHECK(components(Graph{}).empty());
}
