#pragma once

// shared graph builders and slow-but-obvious oracles for the test suite
#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cliquedyn/graph.hpp"
#include "cliquedyn/iso.hpp"

namespace testutil {

using cliquedyn::Graph;

inline std::string padname(const std::string& prefix, int v, int width = 3) {
  std::string s = std::to_string(v);
  return prefix + std::string(static_cast<size_t>(width) - s.size(), '0') + s;
}

inline Graph cycle(int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(padname("c", i), padname("c", (i + 1) % n));
  return Graph::from_edges({}, edges);
}

inline Graph path(int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices{padname("p", 0)};
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(padname("p", i), padname("p", i + 1));
  return Graph::from_edges(vertices, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(padname("k", i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(padname("k", i), padname("k", j));
  return Graph::from_edges(vertices, edges);
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<std::string> vertices;
  std::vector<int> part_of;
  for (size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) {
      vertices.push_back(padname("m", static_cast<int>(vertices.size())));
      part_of.push_back(static_cast<int>(p));
    }
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (part_of[i] != part_of[j]) edges.emplace_back(vertices[i], vertices[j]);
  return Graph::from_edges(vertices, edges);
}

inline Graph octahedron() { return complete_multipartite({2, 2, 2}); }

inline Graph star(int leaves) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < leaves; ++i) edges.emplace_back("hub", padname("s", i));
  return Graph::from_edges({"hub"}, edges);
}

inline Graph petersen() {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(padname("o", i), padname("o", (i + 1) % 5));  // outer C5
    edges.emplace_back(padname("i", i), padname("i", (i + 2) % 5));  // inner pentagram
    edges.emplace_back(padname("o", i), padname("i", i));
  }
  return Graph::from_edges({}, edges);
}

inline Graph cube() {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) edges.emplace_back(padname("q", v), padname("q", v ^ (1 << b)));
  return Graph::from_edges({}, edges);
}

inline Graph prism() {  // K3 x K2
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 3; ++i) {
    edges.emplace_back(padname("a", i), padname("a", (i + 1) % 3));
    edges.emplace_back(padname("b", i), padname("b", (i + 1) % 3));
    edges.emplace_back(padname("a", i), padname("b", i));
  }
  return Graph::from_edges({}, edges);
}

inline Graph icosahedron() {
  // standard vertex list: 0 and 11 antipodal, two pentagonal rings between
  static const int faces[][2] = {
      {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 2},   {2, 3},   {3, 4},  {4, 5},  {5, 1},
      {1, 6},  {2, 6},  {2, 7},  {3, 7},  {3, 8},  {4, 8},   {4, 9},   {5, 9},  {5, 10}, {1, 10},
      {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6}, {6, 11},  {7, 11},  {8, 11}, {9, 11}, {10, 11}};
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& f : faces) edges.emplace_back(padname("v", f[0], 2), padname("v", f[1], 2));
  return Graph::from_edges({}, edges);
}

// disjoint union with prefixed names so the pieces cannot collide
// triangle with a pendant triangle on each edge (3-sun); classic non-Helly
inline Graph three_sun() {
  return Graph::from_edges({}, {{"a", "b"},
                                {"b", "c"},
                                {"c", "a"},
                                {"a", "x"},
                                {"b", "x"},
                                {"b", "y"},
                                {"c", "y"},
                                {"c", "z"},
                                {"a", "z"}});
}

inline Graph disjoint_union(const Graph& a, const Graph& b, const std::string& pa = "A_",
                            const std::string& pb = "B_") {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < a.vertex_count(); ++v) vertices.push_back(pa + a.name(v));
  for (int v = 0; v < b.vertex_count(); ++v) vertices.push_back(pb + b.name(v));
  for (const auto& [u, v] : a.edges()) edges.emplace_back(pa + a.name(u), pa + a.name(v));
  for (const auto& [u, v] : b.edges()) edges.emplace_back(pb + b.name(u), pb + b.name(v));
  return Graph::from_edges(vertices, edges);
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::string> vertices;
  for (int v = 0; v < n; ++v) vertices.push_back(padname("r", v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(vertices[static_cast<size_t>(u)],
                                        vertices[static_cast<size_t>(v)]);
  return Graph::from_edges(vertices, edges);
}

// the same graph under a random renaming (for isomorphism tests)
inline Graph relabel_random(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> vertices;
  for (int v = 0; v < g.vertex_count(); ++v)
    vertices.push_back(padname("x", perm[static_cast<size_t>(v)]));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges())
    edges.emplace_back(vertices[static_cast<size_t>(u)], vertices[static_cast<size_t>(v)]);
  return Graph::from_edges(vertices, edges);
}

// ---- brute-force oracles ----

// every maximal clique by subset enumeration; n <= 20 or so
inline std::vector<std::vector<int>> brute_max_cliques(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    bool complete = true;
    for (size_t i = 0; i < members.size() && complete; ++i)
      for (size_t j = i + 1; j < members.size() && complete; ++j)
        if (!g.adjacent(members[i], members[j])) complete = false;
    if (!complete) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask & (1u << v)) continue;
      bool joins = true;
      for (int m : members)
        if (!g.adjacent(v, m)) {
          joins = false;
          break;
        }
      if (joins) maximal = false;
    }
    if (maximal) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// permutation backtracking with degree pruning; n <= 8 or so
inline bool brute_iso(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < n; ++v) dg.push_back(g.degree(v)), dh.push_back(h.degree(v));
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<size_t>(w)] || dg[static_cast<size_t>(v)] != dh[static_cast<size_t>(w)])
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.adjacent(u, v) != h.adjacent(map[static_cast<size_t>(u)], w)) ok = false;
      if (!ok) continue;
      map[static_cast<size_t>(v)] = w;
      used[static_cast<size_t>(w)] = 1;
      if (self(self, v + 1)) return true;
      used[static_cast<size_t>(w)] = 0;
      map[static_cast<size_t>(v)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

// all isomorphism classes on exactly n vertices, grown by vertex addition
// from the classes on n-1 vertices and deduplicated by canonical form
inline std::vector<Graph> graph_classes(int n) {
  std::vector<Graph> level{Graph::from_edges({"g0"}, {})};
  for (int k = 2; k <= n; ++k) {
    std::set<cliquedyn::CanonicalForm> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (std::uint32_t attach = 0; attach < (1u << (k - 1)); ++attach) {
        std::vector<std::string> vertices = g.names();
        std::string fresh = padname("g", k - 1, 2);
        vertices.push_back(fresh);
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [u, v] : g.edges()) edges.emplace_back(g.name(u), g.name(v));
        for (int b = 0; b < k - 1; ++b)
          if (attach & (1u << b)) edges.emplace_back(g.name(b), fresh);
        Graph candidate = Graph::from_edges(vertices, edges);
        if (seen.insert(cliquedyn::canonical_form(candidate)).second)
          next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline std::vector<Graph> connected_graph_classes_upto(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k)
    for (Graph& g : graph_classes(k))
      if (cliquedyn::is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace testutil
