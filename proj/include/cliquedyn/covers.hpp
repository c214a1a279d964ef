#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn {

// Vertex map between two graphs; map[v] is the target index of source vertex v.
// Plain data: nothing is checked at construction. verify_hom and the cover
// check below say what the map actually is; callers must inspect the report.
struct GraphHom {
  Graph source;
  Graph target;
  std::vector<int> map;
};

// Build a hom from (source name, target name) pairs. Every source vertex must
// be mapped exactly once; target names must exist.
GraphHom make_hom(Graph source, Graph target,
                  const std::vector<std::pair<std::string, std::string>>& pairs);

// True iff every source edge maps to a target edge (in particular, adjacent
// vertices have distinct images).
bool verify_hom(const GraphHom& h);

struct CoverReport {
  bool is_hom = false;
  bool is_triangular_cover = false;
  // smallest distance in the source between two distinct vertices of one
  // fiber; nullopt when every fiber is a singleton or the members are in
  // different components (treated as infinite)
  std::optional<int> min_fiber_distance;
  // a source vertex at which the closed-neighborhood condition fails
  std::optional<std::string> failing_vertex;
};

// Triangular cover check: the restriction of the map to each closed
// neighborhood must be an isomorphism onto the induced closed neighborhood of
// the image. The fiber-distance field is computed independently so callers
// can cross-check it against the "distinct fiber members at distance > 3"
// characterization.
CoverReport is_triangular_cover(const GraphHom& h);

struct QuotientResult {
  Graph graph;
  GraphHom projection;
  CoverReport report;
};

// Quotient by the cyclic group generated by a fixed-point-free automorphism.
// perm maps vertex index -> vertex index; orbits become vertices named after
// their lexicographically least member. Throws if perm is not an automorphism
// or fixes a vertex. The projection's cover report is returned alongside;
// the quotient exists even when the projection is not a triangular cover.
QuotientResult quotient(const Graph& g, const std::vector<int>& perm);
QuotientResult quotient_by_names(const Graph& g,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);

// The map induced on clique graphs by a triangular cover: each source clique
// maps elementwise onto a target clique. Throws std::invalid_argument when h
// is not a triangular cover, and std::logic_error if an image fails to be a
// maximal clique (which the cover property rules out).
GraphHom induced_clique_map(const GraphHom& h, const CliqueGraphResult& source_k,
                            const CliqueGraphResult& target_k);

struct UniversalBall {
  Graph cover;
  GraphHom projection;          // cover -> base
  std::vector<int> depths;      // per cover vertex
  std::vector<int> boundary;    // cover vertices at the rim with incomplete neighborhoods
};

// Radius-r ball of the universal triangular cover, developed breadth-first:
// neighborhoods are completed one vertex at a time, copying exactly the edges
// present among the projected neighbors so triangles lift; whenever a vertex
// acquires two neighbors over the same base vertex the two are forced equal in
// every cover, so they are merged (keeping the older vertex). Nothing else is
// ever identified. Deterministic: FIFO frontier, sorted neighbor order.
// Requires a connected base graph.
UniversalBall universal_cover_ball(const Graph& g, int base_vertex, int radius);

}  // namespace cliquedyn
