#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn {

struct Budget {
  long long max_steps = 64;
  long long max_vertices = 100000;
};

enum class DynamicsStatus { Converged, BudgetExceeded };

// Outcome of iterating the clique graph operator. CONVERGED means the first
// repeated canonical form was found: k^m G is isomorphic to k^(m+p) G and no
// earlier repeat exists. BUDGET_EXCEEDED carries no claim about divergence;
// it only says the search stopped.
struct DynamicsReport {
  DynamicsStatus status = DynamicsStatus::BudgetExceeded;
  std::vector<long long> size_sequence;  // vertex counts of k^0 G, k^1 G, ...
  int preperiod = -1;                    // m (CONVERGED only)
  int period = -1;                       // p (CONVERGED only)
  std::pair<int, int> witness{-1, -1};   // (m, m+p)
};

// Iterate k until a repeated canonical form or a budget stop. The vertex
// budget is enforced during clique enumeration, before any canonicalization
// of the would-be iterate; an aborted enumeration contributes nothing to
// size_sequence.
DynamicsReport iterate(const Graph& g, const Budget& budget);

// k^2 G for clique-Helly G, computed as the domination retract.
// Throws std::invalid_argument when G is not clique-Helly.
Graph helly_double_step(const Graph& g);

// Raised when a validated shortcut disagrees with the direct computation.
struct ShortcutValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// k^2 G for connected triangle-free G (>= 2 vertices), computed by deleting
// degree-one vertices. With validate set, k^2 G is also computed directly and
// the two results are checked against each other; a mismatch throws
// ShortcutValidationError rather than falling back silently.
Graph triangle_free_double_step(const Graph& g, bool validate = true);

}  // namespace cliquedyn
