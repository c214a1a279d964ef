#include "cliquedyn/dynamics.hpp"

#include <unordered_map>

#include "cliquedyn/iso.hpp"

namespace cliquedyn {

DynamicsReport iterate(const Graph& g, const Budget& budget) {
  if (budget.max_steps < 0 || budget.max_vertices < 1)
    throw std::invalid_argument("iterate: nonsensical budget");

  DynamicsReport rep;
  std::unordered_map<CanonicalForm, int, CanonicalFormHash> seen;

  Graph cur = g;
  rep.size_sequence.push_back(cur.vertex_count());
  if (cur.vertex_count() > budget.max_vertices) return rep;  // BUDGET_EXCEEDED
  seen.emplace(canonical_form(cur), 0);

  for (int step = 1; step <= budget.max_steps; ++step) {
    auto cliques = maximal_cliques_capped(cur, static_cast<std::size_t>(budget.max_vertices));
    if (!cliques) return rep;  // enumeration tripped the vertex budget
    cur = clique_graph_from(cur, std::move(*cliques)).graph;
    rep.size_sequence.push_back(cur.vertex_count());

    auto [it, inserted] = seen.emplace(canonical_form(cur), step);
    if (!inserted) {
      rep.status = DynamicsStatus::Converged;
      rep.preperiod = it->second;
      rep.period = step - it->second;
      rep.witness = {rep.preperiod, step};
      return rep;
    }
  }
  return rep;  // step budget exhausted
}

Graph helly_double_step(const Graph& g) {
  if (!is_clique_helly(g)) throw std::invalid_argument("helly_double_step: graph is not clique-Helly");
  return domination_retract(g);
}

Graph triangle_free_double_step(const Graph& g, bool validate) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("triangle_free_double_step: need at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("triangle_free_double_step: graph is disconnected");
  if (!triangles(g).empty())
    throw std::invalid_argument("triangle_free_double_step: graph has a triangle");

  Graph shortcut = prune_degree_one(g);
  if (validate) {
    Graph direct = clique_graph(clique_graph(g).graph).graph;
    if (!are_isomorphic(shortcut, direct))
      throw ShortcutValidationError(
          "triangle_free_double_step: pruning disagrees with k^2 (" +
          std::to_string(shortcut.vertex_count()) + " vs " +
          std::to_string(direct.vertex_count()) + " vertices)");
  }
  return shortcut;
}

}  // namespace cliquedyn
