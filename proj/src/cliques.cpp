#include "cliquedyn/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cliquedyn {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, std::span<const int> b) {
  std::vector<int> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Recursive Bron-Kerbosch with pivoting. Returns false when the cap tripped.
bool bk_pivot(const Graph& g, Clique& r, std::vector<int> p, std::vector<int> x,
              std::vector<Clique>& out, const std::atomic<bool>* stop,
              std::atomic<std::size_t>* counter, std::size_t cap) {
  if (stop && stop->load(std::memory_order_relaxed)) return false;
  if (p.empty() && x.empty()) {
    if (counter) {
      if (counter->fetch_add(1, std::memory_order_relaxed) + 1 > cap) return false;
    }
    Clique c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return true;
  }
  // pivot: vertex of P u X covering the most of P
  int pivot = -1;
  std::size_t best = 0;
  bool first = true;
  for (const auto* side : {&p, &x}) {
    for (int u : *side) {
      auto nb = g.neighbors(u);
      std::size_t cnt = 0;
      std::size_t i = 0, j = 0;
      while (i < p.size() && j < nb.size()) {
        if (p[i] == nb[j]) {
          ++cnt;
          ++i;
          ++j;
        } else if (p[i] < nb[j]) {
          ++i;
        } else {
          ++j;
        }
      }
      if (first || cnt > best) {
        best = cnt;
        pivot = u;
        first = false;
      }
    }
  }
  std::vector<int> ext;
  if (pivot >= 0) {
    auto nb = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), nb.begin(), nb.end(), std::back_inserter(ext));
  } else {
    ext = p;
  }
  for (int v : ext) {
    r.push_back(v);
    if (!bk_pivot(g, r, intersect_sorted(p, g.neighbors(v)), intersect_sorted(x, g.neighbors(v)),
                  out, stop, counter, cap))
      return false;
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    auto it = std::lower_bound(x.begin(), x.end(), v);
    x.insert(it, v);
  }
  return true;
}

std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n), pos(n), order;
  order.reserve(n);
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  std::vector<std::vector<int>> bucket(maxdeg + 1);
  for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  int cur = 0;
  for (int iter = 0; iter < n; ++iter) {
    while (cur <= maxdeg && bucket[cur].empty()) ++cur;
    if (cur > maxdeg) break;
    // buckets are lazily maintained: skip entries whose degree moved on
    int v = -1;
    while (!bucket[cur].empty()) {
      int cand = bucket[cur].back();
      bucket[cur].pop_back();
      if (!removed[cand] && deg[cand] == cur) {
        v = cand;
        break;
      }
    }
    if (v == -1) {
      --iter;
      continue;
    }
    order.push_back(v);
    removed[v] = 1;
    for (int w : g.neighbors(v)) {
      if (!removed[w]) {
        --deg[w];
        bucket[deg[w]].push_back(w);
        if (deg[w] < cur) cur = deg[w];
      }
    }
  }
  (void)pos;
  return order;
}

std::optional<std::vector<Clique>> enumerate_cliques(const Graph& g,
                                                     std::optional<std::size_t> cap) {
  const int n = g.vertex_count();
  std::vector<Clique> all;
  if (n == 0) return all;

  std::vector<int> order = degeneracy_order(g);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  std::atomic<bool> stop{false};
  std::atomic<std::size_t> counter{0};
  std::atomic<std::size_t>* counter_ptr = cap ? &counter : nullptr;
  std::size_t cap_v = cap.value_or(0);

  bool tripped = false;
#pragma omp parallel
  {
    std::vector<Clique> mine;
#pragma omp for schedule(dynamic, 8) nowait
    for (int i = 0; i < n; ++i) {
      if (stop.load(std::memory_order_relaxed)) continue;
      int v = order[i];
      std::vector<int> p, x;
      for (int w : g.neighbors(v)) (rank[w] > i ? p : x).push_back(w);
      Clique r{v};
      if (!bk_pivot(g, r, std::move(p), std::move(x), mine, cap ? &stop : nullptr, counter_ptr,
                    cap_v)) {
        stop.store(true, std::memory_order_relaxed);
      }
    }
#pragma omp critical(cliquedyn_bk_merge)
    {
      if (stop.load(std::memory_order_relaxed) && cap) {
        tripped = true;
      } else {
        all.insert(all.end(), std::make_move_iterator(mine.begin()),
                   std::make_move_iterator(mine.end()));
      }
    }
  }
  if (cap && (tripped || stop.load())) return std::nullopt;
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
  return *enumerate_cliques(g, std::nullopt);
}

std::optional<std::vector<Clique>> maximal_cliques_capped(const Graph& g, std::size_t cap) {
  return enumerate_cliques(g, cap);
}

namespace {

std::string fresh_clique_name(std::size_t idx, std::size_t total) {
  std::size_t width = 1;
  for (std::size_t t = total > 0 ? total - 1 : 0; t >= 10; t /= 10) ++width;
  std::string digits = std::to_string(idx);
  return "c" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

CliqueGraphResult clique_graph_from(const Graph& g, std::vector<Clique> cliques) {
  const std::size_t k = cliques.size();
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back(fresh_clique_name(i, k));

  // Adjacency via shared membership: for every input vertex, all cliques
  // containing it are pairwise adjacent.
  std::vector<std::vector<int>> at_vertex(g.vertex_count());
  for (std::size_t i = 0; i < k; ++i)
    for (int v : cliques[i]) at_vertex[v].push_back(static_cast<int>(i));

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<int, int>> raw;
  for (const auto& list : at_vertex)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) raw.emplace_back(list[a], list[b]);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(names[a], names[b]);

  CliqueGraphResult res;
  res.graph = Graph::from_edges(std::move(names), edges);
  res.cliques = std::move(cliques);
  return res;
}

CliqueGraphResult clique_graph(const Graph& g) {
  return clique_graph_from(g, maximal_cliques(g));
}

bool dominates(const Graph& g, int u, int w) {
  if (u == w) throw std::invalid_argument("dominates: u and w must differ");
  // N[w] subset of N[u]; closed neighborhoods, so w must be adjacent to u.
  if (!g.adjacent(u, w)) return false;
  auto nu = g.neighbors(u);
  for (int x : g.neighbors(w)) {
    if (x == u) continue;
    if (x != w && !std::binary_search(nu.begin(), nu.end(), x)) return false;
  }
  return true;
}

Graph domination_retract(const Graph& g) {
  const int n = g.vertex_count();
  // Group by closed neighborhood; class representative = least index
  // (== lexicographically least name).
  std::vector<std::vector<int>> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
  }
  std::vector<int> rep(n, -1);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    if (rep[v] != -1) continue;
    rep[v] = v;
    reps.push_back(v);
    for (int w = v + 1; w < n; ++w)
      if (rep[w] == -1 && closed[w] == closed[v]) rep[w] = v;
  }
  // Keep representatives not strictly dominated by any other class.
  std::vector<int> keep;
  for (int a : reps) {
    bool dominated = false;
    for (int b : reps) {
      if (a == b || closed[a] == closed[b]) continue;
      if (std::includes(closed[b].begin(), closed[b].end(), closed[a].begin(), closed[a].end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(a);
  }
  return induced(g, keep);
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (int v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      // common neighbors w > v
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) {
          if (nu[i] > v) out.push_back({u, v, nu[i]});
          ++i;
          ++j;
        } else if (nu[i] < nv[j]) {
          ++i;
        } else {
          ++j;
        }
      }
    }
  }
  return out;
}

namespace {

bool extended_triangle_ok(const Graph& g, const std::array<int, 3>& t) {
  // candidates: vertices adjacent to at least two corners (corners included,
  // since each corner is adjacent to the other two)
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
  for (int x : cand) {
    bool universal = true;
    for (int y : cand) {
      if (x != y && !g.adjacent(x, y)) {
        universal = false;
        break;
      }
    }
    if (universal) return true;
  }
  return false;
}

}  // namespace

bool is_clique_helly(const Graph& g) {
  auto tris = triangles(g);
  const std::int64_t m = static_cast<std::int64_t>(tris.size());
  int violations = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : violations)
  for (std::int64_t i = 0; i < m; ++i) {
    if (!extended_triangle_ok(g, tris[i])) ++violations;
  }
  return violations == 0;
}

bool helly_brute(const Graph& g, std::size_t cap) {
  auto cliques = maximal_cliques(g);
  const std::size_t k = cliques.size();
  if (k > cap)
    throw std::invalid_argument("helly_brute: " + std::to_string(k) +
                                " maximal cliques exceed cap " + std::to_string(cap));
  if (k > 62) throw std::invalid_argument("helly_brute: cap beyond 62 cliques is not supported");
  if (k < 3) return true;

  // membership bitsets over vertices, pairwise-intersection masks over cliques
  const int n = g.vertex_count();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> member(k, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (int v : cliques[i]) member[i][v / 64] |= 1ull << (v % 64);

  std::vector<std::uint64_t> meets(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      bool inter = false;
      for (std::size_t w = 0; w < words; ++w)
        if (member[i][w] & member[j][w]) {
          inter = true;
          break;
        }
      if (inter) meets[i] |= 1ull << j;
    }

  std::vector<std::uint64_t> common(words);
  for (std::uint64_t s = 1; s < (1ull << k); ++s) {
    if (std::popcount(s) < 3) continue;
    bool pairwise = true;
    for (std::uint64_t rest = s; rest;) {
      std::uint64_t bit = rest & (~rest + 1);
      std::size_t i = static_cast<std::size_t>(std::countr_zero(bit));
      rest ^= bit;
      if ((meets[i] & (s ^ bit)) != (s ^ bit)) {
        pairwise = false;
        break;
      }
    }
    if (!pairwise) continue;
    std::fill(common.begin(), common.end(), ~0ull);
    for (std::uint64_t rest = s; rest;) {
      std::uint64_t bit = rest & (~rest + 1);
      std::size_t i = static_cast<std::size_t>(std::countr_zero(bit));
      rest ^= bit;
      for (std::size_t w = 0; w < words; ++w) common[w] &= member[i][w];
    }
    bool nonempty = false;
    for (std::size_t w = 0; w < words; ++w)
      if (common[w]) {
        nonempty = true;
        break;
      }
    if (!nonempty) return false;
  }
  return true;
}

}  // namespace cliquedyn
