#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn {

// A locally finite, possibly infinite graph presented implicitly: neighbors(d)
// returns the finite neighbor list of the vertex with descriptor d. The
// function must be pure, deterministic, irreflexive and symmetric; extraction
// verifies symmetry on everything it touches and raises on violations.
struct GraphOracle {
  std::function<std::vector<std::string>(const std::string&)> neighbors;
  std::string basepoint;
};

// Wrap a finite graph; descriptors are its vertex names, basepoint the first.
GraphOracle oracle_from_graph(Graph g);

// Finite window onto an oracle: all vertices within the radius, all edges
// among them. Vertices strictly inside have complete neighborhoods; the rim
// (depth == radius) may not.
struct Ball {
  Graph graph;
  int center = -1;
  int radius = 0;
  std::vector<int> depths;    // exact oracle distance from the center
  std::vector<int> boundary;  // vertices at depth == radius, sorted
};

Ball extract_ball(const GraphOracle& o, const std::string& v0, int radius);

// The clique-graph operator on oracles. Descriptors are maximal cliques
// written as "{m1,m2,...}" with members sorted as strings; base descriptors
// must therefore avoid '{', '}' and ','. Each neighbor query is answered
// inside the finite subgraph induced on the union of closed neighborhoods of
// N[Q]: every clique meeting Q lies in N[Q], and maximality there equals
// maximality in the full graph. The basepoint becomes the lexicographically
// least clique containing the old basepoint.
GraphOracle clique_oracle(const GraphOracle& o);

std::string clique_descriptor(std::vector<std::string> members);
std::vector<std::string> parse_clique_descriptor(const std::string& d);

// n clique-graph applications on a radius-r window, with certification of the
// part that agrees with the true infinite computation. Each application costs
// two radii of trust: a clique and its complete adjacency are certain only
// when its members' distance-2 surroundings were complete. A final vertex is
// trusted when its provenance closure (the level-0 vertices it ultimately
// came from) lies within distance r - 2n of the center.
class TrustedIterate {
 public:
  TrustedIterate(Ball window, std::vector<CliqueGraphResult> levels, int trust_radius);

  const Ball& window() const { return window_; }
  const std::vector<CliqueGraphResult>& levels() const { return levels_; }
  int steps() const { return static_cast<int>(levels_.size()); }
  int trust_radius() const { return trust_radius_; }
  const Graph& graph() const;  // the final level

  // per final-level vertex
  const std::vector<int>& provenance_depth() const { return depth_; }
  bool trusted(int v) const { return depth_[static_cast<size_t>(v)] <= trust_radius_; }
  std::vector<int> provenance(int v) const;  // level-0 indices, sorted

  // Nested name of a final vertex built from window descriptors:
  // level 0 -> the descriptor itself, level j -> "{child,child,...}" with
  // children sorted as strings. Identical across runs and radii, which makes
  // trusted regions from different windows directly comparable.
  std::string structural_name(int v) const;

  // Induced subgraph on the vertices with provenance depth <= t, renamed
  // structurally. t may not exceed the trust radius: beyond it the window
  // carries no guarantee.
  Graph trusted_region(int t) const;
  Graph trusted_region() const { return trusted_region(trust_radius_); }

 private:
  std::string name_at(int level, int v) const;

  Ball window_;
  std::vector<CliqueGraphResult> levels_;
  int trust_radius_;
  std::vector<int> depth_;
  // memoized structural names per level (level 0 = window vertices)
  mutable std::vector<std::vector<std::string>> names_;
};

TrustedIterate trusted_iterate(const GraphOracle& o, const std::string& v0, int radius, int steps);

}  // namespace cliquedyn
