#pragma once

// Single-threaded reference implementations of the parallel kernels. These
// deliberately take the simplest correct route (plain recursion, no degeneracy
// ordering, no fan-out) so the optimized paths have something independent to
// be checked against, both in the unit tests and in the benchmark harness.

#include <vector>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn::serial {

std::vector<Clique> maximal_cliques(const Graph& g);
GirthValue local_girth(const Graph& g);
int local_min_degree(const Graph& g);
bool is_clique_helly(const Graph& g);

}  // namespace cliquedyn::serial
