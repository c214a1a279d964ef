#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliquedyn/graph.hpp"
#include "cliquedyn/oracle.hpp"

namespace cliquedyn {

// Generators for the structured infinite families, truncated to finite
// windows. The tree-of-paths family uses a descriptor grammar:
//
//   path addresses   "A" and "B" are the two root paths joined by the central
//                    8-cycle; "P.j" is the path matched to path P at
//                    position j (one matching site per path vertex, the one
//                    toward the parent excluded; roots attach to the central
//                    cycle at position 0).
//   v|P|j            path vertex at position j in [-L, L]
//   s|P|n            subdivision vertex of the label-n edge (between
//                    positions n-1 and n), n in [-L+1, L]
//   q|P|n|t          t-th vertex of the pendant chain of length n hanging
//                    from s|P|n, for labels n >= 1, t in [1, n]
//   w|C|a|t          8-cycle arm vertices at the matching site owned by the
//                    child path C: two arms a in {0,1} of three vertices
//                    t in {1,2,3}, t=1 adjacent to the parent-side vertex,
//                    t=3 adjacent to v|C|parentpos(C); the central cycle is
//                    owned by "B"
//
// Parameters: L >= 1 bounds the positions/labels, b >= 0 bounds the depth of
// the path-matching tree (paths at depth b carry no further matching sites).
// All choices left open in the construction (labelling origins, which paths
// match where) are fixed by this canonical addressing; any two choices give
// isomorphic graphs.

Graph tree_T(int L, int b);
GraphOracle tree_T_oracle(int L, int b);  // basepoint v|A|0

// One component of tree_T minus the central cycle, with a 4-cycle
// (fresh vertices y;1, y;2, y;3) glued where the cycle used to attach: the
// quotient of tree_T by the symmetry swapping the two components and rotating
// the central cycle by four.
Graph t_prime(int L, int b = 1);
GraphOracle t_prime_oracle(int L, int b = 1);  // basepoint v|A|0

// A 16-cycle x;00..x;15 with a copy of the component above glued at the
// vertices x;00, x;04, x;08, x;12 (copy vertices carry prefixes T0!..T3!, the
// glued vertex keeps its cycle name).
Graph t_double_prime(int L, int b = 1);

// The fixed-point-free symmetry of t_double_prime advancing the cycle by
// eight and swapping opposite copies, as (vertex, image) pairs suitable for
// quotienting.
std::vector<std::pair<std::string, std::string>> t_double_prime_symmetry(int L, int b = 1);

// The label-shift rewrite on descriptors: adds delta to every position,
// label, and path-address component (chain and arm indices are untouched).
// Works on any of the descriptor kinds above, with an optional copy prefix.
std::string tree_t_shift(const std::string& descriptor, int delta);

// Two-way triangular strip: top row t_i (i < legs.size()), bottom row b_i
// (i <= legs.size()), edges t-t, b-b, t_i-b_i, t_i-b_{i+1}; a pendant path of
// length legs[i] hangs from t_i.
Graph caterpillar(const std::vector<int>& legs);

// Ball of radius r in the d-regular triangulation of the plane (d >= 6):
// every interior vertex has degree d and a C_d neighborhood. Grown layer by
// layer; depths in the returned Ball are the layer numbers.
Ball triangulation(int d, int r);
GraphOracle triangulation_oracle(int d);  // basepoint h

GraphOracle path_oracle();   // two-way infinite path, integer descriptors, basepoint 0
GraphOracle tree3_oracle();  // 3-regular tree, address descriptors, basepoint r

// CLI-facing dispatcher. Families and parameters:
//   tree_T L b | t_prime L [b] | t_double_prime L [b] | caterpillar legs=a,b,c
//   triangulation d r | path n | tree3 r
Graph generate(const std::string& family, const std::map<std::string, std::string>& params);

}  // namespace cliquedyn
