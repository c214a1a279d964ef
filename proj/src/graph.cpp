#include "cliquedyn/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cliquedyn {

Graph Graph::from_edges(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on vertex '" + u + "'");
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  Graph g;
  g.names_ = std::move(vertices);
  g.adj_.assign(g.names_.size(), {});

  auto idx = [&g](const std::string& name) {
    auto it = std::lower_bound(g.names_.begin(), g.names_.end(), name);
    return static_cast<int>(it - g.names_.begin());
  };
  for (const auto& [u, v] : edges) {
    int a = idx(u), b = idx(v);
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += static_cast<long long>(nb.size());
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::adjacent(int u, int v) const {
  check_index(u);
  check_index(v);
  if (u == v) return false;
  const auto& small = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(small.begin(), small.end(), other);
}

std::optional<int> Graph::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int Graph::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
  return *i;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph induced(const Graph& g, std::span<const int> keep) {
  std::vector<int> sel(keep.begin(), keep.end());
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());

  std::vector<std::string> names;
  names.reserve(sel.size());
  for (int v : sel) names.push_back(g.name(v));

  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < sel.size(); ++i) {
    for (int w : g.neighbors(sel[i])) {
      if (w > sel[i] && std::binary_search(sel.begin(), sel.end(), w))
        edges.emplace_back(g.name(sel[i]), g.name(w));
    }
  }
  return Graph::from_edges(std::move(names), edges);
}

Graph induced_by_names(const Graph& g, const std::vector<std::string>& keep) {
  std::vector<int> sel;
  sel.reserve(keep.size());
  for (const auto& n : keep) sel.push_back(g.require_index(n));
  return induced(g, sel);
}

GirthValue girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  // BFS from every vertex; the first non-tree edge seen closes a shortest
  // cycle through the root up to the usual +1 slack, which the minimum over
  // all roots absorbs.
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return GirthValue::infinite();
  return GirthValue::finite(best);
}

Graph neighborhood_graph(const Graph& g, int v) {
  auto nb = g.neighbors(v);
  std::vector<int> keep(nb.begin(), nb.end());
  return induced(g, keep);
}

GirthValue local_girth(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("local_girth: empty graph");
  GirthValue best = GirthValue::infinite();
#pragma omp parallel
  {
    GirthValue mine = GirthValue::infinite();
#pragma omp for schedule(dynamic, 16) nowait
    for (int v = 0; v < n; ++v) {
      GirthValue gv = girth(neighborhood_graph(g, v));
      if (gv < mine) mine = gv;
    }
#pragma omp critical(cliquedyn_local_girth)
    {
      if (mine < best) best = mine;
    }
  }
  return best;
}

int local_min_degree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("local_min_degree: empty graph");
  int best = std::numeric_limits<int>::max();
#pragma omp parallel
  {
    int mine = std::numeric_limits<int>::max();
#pragma omp for schedule(dynamic, 16) nowait
    for (int v = 0; v < n; ++v) {
      Graph nb = neighborhood_graph(g, v);
      if (nb.vertex_count() == 0) {
        mine = std::min(mine, 0);
        continue;
      }
      for (int u = 0; u < nb.vertex_count(); ++u) mine = std::min(mine, nb.degree(u));
    }
#pragma omp critical(cliquedyn_local_min_degree)
    best = std::min(best, mine);
  }
  return best;
}

namespace {

bool neighborhood_is_cycle(const Graph& nb) {
  if (nb.vertex_count() < 3) return false;
  for (int u = 0; u < nb.vertex_count(); ++u)
    if (nb.degree(u) != 2) return false;
  return is_connected(nb);
}

}  // namespace

bool is_locally_cyclic(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("is_locally_cyclic: empty graph");
  int violations = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : violations)
  for (int v = 0; v < n; ++v) {
    if (!neighborhood_is_cycle(neighborhood_graph(g, v))) ++violations;
  }
  return violations == 0;
}

Graph prune_degree_one(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 1) keep.push_back(v);
  return induced(g, keep);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> q{src};
  dist.at(src) = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.push_back({});
    std::deque<int> q{s};
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      out[id].push_back(u);
      for (int w : g.neighbors(u))
        if (comp[w] == -1) {
          comp[w] = id;
          q.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g).size() == 1;
}

}  // namespace cliquedyn
