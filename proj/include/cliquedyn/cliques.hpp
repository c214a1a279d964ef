#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

// A maximal clique as a sorted list of vertex indices of its host graph.
using Clique = std::vector<int>;

// All maximal cliques, sorted lexicographically by member list. Isolated
// vertices yield singleton cliques. Runs Bron-Kerbosch with pivoting over a
// degeneracy ordering; the per-root subproblems fan out across threads and the
// final sort makes the result independent of scheduling.
std::vector<Clique> maximal_cliques(const Graph& g);

// Same, but gives up (returns nullopt) as soon as more than `cap` cliques
// have been found. Used to keep iterated clique graphs inside a vertex budget
// without paying for a full enumeration that is about to be thrown away.
std::optional<std::vector<Clique>> maximal_cliques_capped(const Graph& g, std::size_t cap);

// Clique graph kG. Vertex i of `graph` corresponds to cliques[i] of the input
// (vertices are named c000, c001, ... in clique order, so index order, name
// order and clique order all agree). Two cliques are adjacent iff they share
// a vertex.
struct CliqueGraphResult {
  Graph graph;
  std::vector<Clique> cliques;
};

CliqueGraphResult clique_graph(const Graph& g);

// Build the clique graph from an externally produced clique list (which must
// be exactly the maximal cliques of g, sorted). Lets callers reuse a capped
// enumeration.
CliqueGraphResult clique_graph_from(const Graph& g, std::vector<Clique> cliques);

// True iff N[u] contains N[w] (u dominates w). Throws if u == w.
bool dominates(const Graph& g, int u, int w);

// Contract each class of mutually dominating vertices to its lexicographically
// least member, then delete every representative strictly dominated by a
// representative of another class. One simultaneous pass, no iteration.
Graph domination_retract(const Graph& g);

// All triangles as sorted index triples, ordered lexicographically.
std::vector<std::array<int, 3>> triangles(const Graph& g);

// Clique-Helly test via the extended-triangle criterion: for every triangle T,
// the subgraph induced on the vertices adjacent to at least two members of T
// must contain a vertex adjacent to all of its other vertices.
bool is_clique_helly(const Graph& g);

// Definitional check: every pairwise-intersecting subfamily of maximal cliques
// of size >= 3 must have a common vertex. Exponential in the number of
// cliques; throws if there are more than `cap`.
bool helly_brute(const Graph& g, std::size_t cap = 20);

}  // namespace cliquedyn
