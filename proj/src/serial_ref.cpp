#include "cliquedyn/serial_ref.hpp"

#include <algorithm>
#include <array>

namespace cliquedyn::serial {

namespace {

std::vector<int> meet(const std::vector<int>& a, std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void bk(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
        std::vector<Clique>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // pivot on the candidate with the largest cover of P
  int pivot = -1;
  std::size_t best = 0;
  bool first = true;
  for (const auto* side : {&p, &x})
    for (int u : *side) {
      std::size_t c = meet(p, g.neighbors(u)).size();
      if (first || c > best) {
        pivot = u;
        best = c;
        first = false;
      }
    }
  std::vector<int> ext;
  std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(), g.neighbors(pivot).end(),
                      std::back_inserter(ext));
  for (int v : ext) {
    r.insert(std::lower_bound(r.begin(), r.end(), v), v);
    bk(g, r, meet(p, g.neighbors(v)), meet(x, g.neighbors(v)), out);
    r.erase(std::lower_bound(r.begin(), r.end(), v));
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
  std::vector<Clique> out;
  if (g.vertex_count() == 0) return out;
  std::vector<int> r, p(g.vertex_count()), x;
  for (int v = 0; v < g.vertex_count(); ++v) p[v] = v;
  bk(g, r, std::move(p), std::move(x), out);
  std::sort(out.begin(), out.end());
  return out;
}

GirthValue local_girth(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("local_girth: empty graph");
  GirthValue best = GirthValue::infinite();
  for (int v = 0; v < g.vertex_count(); ++v) {
    GirthValue gv = girth(neighborhood_graph(g, v));
    if (gv < best) best = gv;
  }
  return best;
}

int local_min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("local_min_degree: empty graph");
  int best = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Graph nb = neighborhood_graph(g, v);
    if (nb.vertex_count() == 0) return 0;
    for (int u = 0; u < nb.vertex_count(); ++u) best = std::min(best, nb.degree(u));
  }
  return best;
}

bool is_clique_helly(const Graph& g) {
  for (const auto& t : triangles(g)) {
    // same extended-triangle test as the parallel kernel, evaluated inline
    std::vector<int> all;
    for (int c : t) {
      auto nb = g.neighbors(c);
      all.insert(all.end(), nb.begin(), nb.end());
      all.push_back(c);
    }
    std::sort(all.begin(), all.end());
    std::vector<int> cand;
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      while (j < all.size() && all[j] == all[i]) ++j;
      if (j - i >= 2) cand.push_back(all[i]);
      i = j;
    }
    bool found = false;
    for (int a : cand) {
      bool universal = true;
      for (int b : cand)
        if (a != b && !g.adjacent(a, b)) {
          universal = false;
          break;
        }
      if (universal) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace cliquedyn::serial
