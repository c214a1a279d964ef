#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cliquedyn/generators.hpp"
#include "cliquedyn/serial_ref.hpp"
#include "test_util.hpp"

using namespace cliquedyn;
using namespace testutil;

namespace {

void agree_on(const Graph& g) {
  CAPTURE(g.vertex_count());
  CHECK(maximal_cliques(g) == serial::maximal_cliques(g));
  CHECK(local_girth(g) == serial::local_girth(g));
  CHECK(local_min_degree(g) == serial::local_min_degree(g));
  CHECK(is_clique_helly(g) == serial::is_clique_helly(g));
}

}  // namespace

TEST_CASE("kernels match the serial reference on the named corpus") {
  for (const Graph& g : {octahedron(), petersen(), cube(), icosahedron(), prism(), three_sun(),
                         complete(7), cycle(9), path(6), star(5),
                         complete_multipartite({2, 2, 2, 2}), disjoint_union(cycle(5), complete(4))})
    agree_on(g);
  // the local invariants reject empty input; the clique kernels accept it
  CHECK(maximal_cliques(Graph{}).empty());
  CHECK(serial::maximal_cliques(Graph{}).empty());
  CHECK(is_clique_helly(Graph{}) == serial::is_clique_helly(Graph{}));
}

TEST_CASE("kernels match the serial reference on random graphs") {
  std::mt19937_64 rng(987654);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 29);
    double p = (n > 18) ? 0.15 : 0.45;
    agree_on(random_graph(n, p, rng()));
  }
  for (int trial = 0; trial < 30; ++trial) agree_on(random_graph(11, 0.75, rng()));
}

TEST_CASE("kernels match the serial reference on triangulation windows") {
  agree_on(triangulation(6, 4).graph);
  agree_on(triangulation(7, 3).graph);
}

TEST_CASE("parallel results are deterministic") {
  Graph g = triangulation(7, 4).graph;
  auto first = maximal_cliques(g);
  auto second = maximal_cliques(g);
  CHECK(first == second);
  Graph r = random_graph(40, 0.3, 777);
  CHECK(maximal_cliques(r) == maximal_cliques(r));
  CHECK(clique_graph(g).graph == clique_graph(g).graph);
}
