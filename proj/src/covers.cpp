#include "cliquedyn/covers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cliquedyn {

GraphHom make_hom(Graph source, Graph target,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> map(static_cast<size_t>(source.vertex_count()), -1);
  for (const auto& [from, to] : pairs) {
    int s = source.require_index(from);
    int t = target.require_index(to);
    if (map[static_cast<size_t>(s)] != -1 && map[static_cast<size_t>(s)] != t)
      throw std::invalid_argument("make_hom: vertex '" + from + "' mapped twice");
    map[static_cast<size_t>(s)] = t;
  }
  for (int v = 0; v < source.vertex_count(); ++v)
    if (map[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("make_hom: vertex '" + source.name(v) + "' is unmapped");
  return GraphHom{std::move(source), std::move(target), std::move(map)};
}

bool verify_hom(const GraphHom& h) {
  if (h.map.size() != static_cast<size_t>(h.source.vertex_count())) return false;
  for (int t : h.map)
    if (t < 0 || t >= h.target.vertex_count()) return false;
  for (const auto& [u, v] : h.source.edges()) {
    int fu = h.map[static_cast<size_t>(u)];
    int fv = h.map[static_cast<size_t>(v)];
    if (fu == fv) return false;
    if (!h.target.adjacent(fu, fv)) return false;
  }
  return true;
}

namespace {

// Smallest source-graph distance between two distinct vertices in one fiber.
// BFS from each vertex, stopping early once the best known bound is reached.
std::optional<int> fiber_distance(const GraphHom& h) {
  const int n = h.source.vertex_count();
  std::vector<std::vector<int>> fibers(static_cast<size_t>(h.target.vertex_count()));
  for (int v = 0; v < n; ++v) fibers[static_cast<size_t>(h.map[static_cast<size_t>(v)])].push_back(v);

  std::optional<int> best;
  std::vector<int> dist(static_cast<size_t>(n));
  for (const auto& fiber : fibers) {
    if (fiber.size() < 2) continue;
    std::set<int> mates(fiber.begin(), fiber.end());
    for (size_t i = 0; i < fiber.size(); ++i) {
      std::fill(dist.begin(), dist.end(), -1);
      std::deque<int> queue{fiber[i]};
      dist[static_cast<size_t>(fiber[i])] = 0;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (best && dist[static_cast<size_t>(u)] >= *best) break;
        for (int w : h.source.neighbors(u)) {
          if (dist[static_cast<size_t>(w)] != -1) continue;
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          if (w != fiber[i] && mates.count(w) && (!best || dist[static_cast<size_t>(w)] < *best))
            best = dist[static_cast<size_t>(w)];
          queue.push_back(w);
        }
      }
    }
  }
  return best;
}

}  // namespace

CoverReport is_triangular_cover(const GraphHom& h) {
  CoverReport rep;
  rep.is_hom = verify_hom(h);
  rep.min_fiber_distance = fiber_distance(h);
  if (!rep.is_hom) return rep;

  for (int v = 0; v < h.source.vertex_count(); ++v) {
    int fv = h.map[static_cast<size_t>(v)];
    auto nbrs = h.source.neighbors(v);
    auto tnbrs = h.target.neighbors(fv);
    // injective on N(v) with image exactly N(f(v))
    std::vector<int> image;
    image.reserve(nbrs.size());
    for (int u : nbrs) image.push_back(h.map[static_cast<size_t>(u)]);
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end() ||
        !std::equal(image.begin(), image.end(), tnbrs.begin(), tnbrs.end())) {
      rep.failing_vertex = h.source.name(v);
      return rep;
    }
    // every edge of the induced closed target neighborhood must be present
    // among the corresponding source vertices (local isomorphism, not just
    // local bijection)
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        bool src = h.source.adjacent(nbrs[i], nbrs[j]);
        bool tgt = h.target.adjacent(h.map[static_cast<size_t>(nbrs[i])],
                                     h.map[static_cast<size_t>(nbrs[j])]);
        if (src != tgt) {
          rep.failing_vertex = h.source.name(v);
          return rep;
        }
      }
  }
  rep.is_triangular_cover = true;
  return rep;
}

QuotientResult quotient(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (perm.size() != static_cast<size_t>(n))
    throw std::invalid_argument("quotient: permutation size mismatch");
  {
    std::vector<int> check = perm;
    std::sort(check.begin(), check.end());
    for (int v = 0; v < n; ++v)
      if (check[static_cast<size_t>(v)] != v)
        throw std::invalid_argument("quotient: not a permutation");
  }
  for (int v = 0; v < n; ++v) {
    if (perm[static_cast<size_t>(v)] == v)
      throw std::invalid_argument("quotient: permutation fixes vertex '" + g.name(v) + "'");
    for (int u : g.neighbors(v)) {
      if (!g.adjacent(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(u)]))
        throw std::invalid_argument("quotient: map is not an automorphism (edge " + g.name(v) +
                                    " -- " + g.name(u) + " breaks)");
    }
  }

  // orbit of each vertex under the generated cyclic group
  std::vector<int> orbit_id(static_cast<size_t>(n), -1);
  std::vector<std::string> orbit_name;
  for (int v = 0; v < n; ++v) {
    if (orbit_id[static_cast<size_t>(v)] != -1) continue;
    std::vector<int> members;
    int cur = v;
    while (orbit_id[static_cast<size_t>(cur)] == -1) {
      orbit_id[static_cast<size_t>(cur)] = static_cast<int>(orbit_name.size());
      members.push_back(cur);
      cur = perm[static_cast<size_t>(cur)];
    }
    std::string least = g.name(members[0]);
    for (int m : members) least = std::min(least, g.name(m));
    orbit_name.push_back(least);
  }

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  std::vector<std::pair<std::string, std::string>> proj_pairs;
  for (int v = 0; v < n; ++v) {
    const std::string& ov = orbit_name[static_cast<size_t>(orbit_id[static_cast<size_t>(v)])];
    proj_pairs.emplace_back(g.name(v), ov);
    if (g.neighbors(v).empty()) isolated.push_back(ov);
    for (int u : g.neighbors(v)) {
      const std::string& ou = orbit_name[static_cast<size_t>(orbit_id[static_cast<size_t>(u)])];
      if (ov == ou) continue;  // adjacent orbit mates collapse; projection is then not a hom
      if (ov < ou) edges.emplace_back(ov, ou);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph q = Graph::from_edges(isolated, edges);
  GraphHom proj = make_hom(g, q, proj_pairs);
  CoverReport rep = is_triangular_cover(proj);
  return QuotientResult{std::move(q), std::move(proj), rep};
}

QuotientResult quotient_by_names(const Graph& g,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> perm(static_cast<size_t>(g.vertex_count()), -1);
  for (const auto& [from, to] : pairs) {
    int s = g.require_index(from);
    int t = g.require_index(to);
    if (perm[static_cast<size_t>(s)] != -1 && perm[static_cast<size_t>(s)] != t)
      throw std::invalid_argument("quotient: vertex '" + from + "' mapped twice");
    perm[static_cast<size_t>(s)] = t;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (perm[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("quotient: vertex '" + g.name(v) + "' missing from permutation");
  return quotient(g, perm);
}

GraphHom induced_clique_map(const GraphHom& h, const CliqueGraphResult& source_k,
                            const CliqueGraphResult& target_k) {
  CoverReport rep = is_triangular_cover(h);
  if (!rep.is_triangular_cover)
    throw std::invalid_argument("induced_clique_map: map is not a triangular cover");

  // index target cliques by their sorted member lists
  std::map<std::vector<int>, int> target_index;
  for (size_t i = 0; i < target_k.cliques.size(); ++i)
    target_index.emplace(target_k.cliques[i], static_cast<int>(i));

  std::vector<int> map;
  map.reserve(source_k.cliques.size());
  for (const auto& q : source_k.cliques) {
    std::vector<int> image;
    image.reserve(q.size());
    for (int v : q) image.push_back(h.map[static_cast<size_t>(v)]);
    std::sort(image.begin(), image.end());
    auto it = target_index.find(image);
    if (it == target_index.end())
      throw std::logic_error(
          "induced_clique_map: clique image is not a maximal clique of the target");
    map.push_back(it->second);
  }
  return GraphHom{source_k.graph, target_k.graph, std::move(map)};
}

namespace {

// Mutable development state for universal_cover_ball. Tiny graphs only, so
// the quadratic scans below are fine.
struct Development {
  const Graph& g;
  int radius;
  std::vector<int> proj;             // lift -> base vertex
  std::vector<int> depth;            // creation depth; min on merge
  std::vector<int> rep;              // union-find forwarding after merges
  std::vector<char> complete;        // neighborhood fully developed
  std::vector<std::set<int>> adj;
  std::deque<int> queue;
  std::deque<std::pair<int, int>> folds;  // pairs forced equal

  explicit Development(const Graph& base, int base_vertex, int r) : g(base), radius(r) {
    proj.push_back(base_vertex);
    depth.push_back(0);
    rep.push_back(0);
    complete.push_back(0);
    adj.emplace_back();
    queue.push_back(0);
  }

  int find(int x) {
    while (rep[static_cast<size_t>(x)] != x) {
      rep[static_cast<size_t>(x)] = rep[static_cast<size_t>(rep[static_cast<size_t>(x)])];
      x = rep[static_cast<size_t>(x)];
    }
    return x;
  }

  bool alive(int x) { return rep[static_cast<size_t>(x)] == x; }

  // queue any pair of neighbors of x that project to the same base vertex
  void scan_duplicates(int x) {
    std::map<int, int> seen;
    for (int y : adj[static_cast<size_t>(x)]) {
      auto [it, inserted] = seen.emplace(proj[static_cast<size_t>(y)], y);
      if (!inserted) folds.emplace_back(it->second, y);
    }
  }

  void add_edge(int a, int b) {
    if (a == b || adj[static_cast<size_t>(a)].count(b)) return;
    adj[static_cast<size_t>(a)].insert(b);
    adj[static_cast<size_t>(b)].insert(a);
    scan_duplicates(a);
    scan_duplicates(b);
  }

  // Merge two lifts over the same base vertex; every triangular cover of g
  // identifies them, so the universal one does too. The older (smaller id)
  // vertex survives, keeping names stable.
  void fold(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (proj[static_cast<size_t>(a)] != proj[static_cast<size_t>(b)])
      throw std::logic_error("universal_cover_ball: folding lifts of distinct base vertices");
    int keep = std::min(a, b), gone = std::max(a, b);
    rep[static_cast<size_t>(gone)] = keep;
    for (int n : adj[static_cast<size_t>(gone)]) {
      adj[static_cast<size_t>(n)].erase(gone);
      if (n != keep) {
        adj[static_cast<size_t>(n)].insert(keep);
        adj[static_cast<size_t>(keep)].insert(n);
      }
    }
    adj[static_cast<size_t>(gone)].clear();
    bool sank = depth[static_cast<size_t>(gone)] < depth[static_cast<size_t>(keep)];
    depth[static_cast<size_t>(keep)] =
        std::min(depth[static_cast<size_t>(keep)], depth[static_cast<size_t>(gone)]);
    complete[static_cast<size_t>(keep)] =
        static_cast<char>(complete[static_cast<size_t>(keep)] | complete[static_cast<size_t>(gone)]);
    scan_duplicates(keep);
    for (int n : adj[static_cast<size_t>(keep)]) scan_duplicates(n);
    if (sank && !complete[static_cast<size_t>(keep)]) queue.push_back(keep);
  }

  void drain_folds() {
    while (!folds.empty()) {
      auto [a, b] = folds.front();
      folds.pop_front();
      fold(a, b);
    }
  }

  // Complete the neighborhood of x: one lifted neighbor per base neighbor,
  // and exactly the base edges among them. Restarts whenever a forced merge
  // rewrites the picture; merges strictly shrink the graph, so this ends.
  void complete_vertex(int x) {
    for (;;) {
      drain_folds();
      x = find(x);
      if (complete[static_cast<size_t>(x)] || depth[static_cast<size_t>(x)] >= radius) return;
      int u = proj[static_cast<size_t>(x)];
      for (int up : g.neighbors(u)) {
        bool present = false;
        for (int y : adj[static_cast<size_t>(x)])
          if (proj[static_cast<size_t>(y)] == up) present = true;
        if (present) continue;
        int fresh = static_cast<int>(proj.size());
        proj.push_back(up);
        depth.push_back(depth[static_cast<size_t>(x)] + 1);
        rep.push_back(fresh);
        complete.push_back(0);
        adj.emplace_back();
        add_edge(x, fresh);
        queue.push_back(fresh);
      }
      std::vector<int> nbrs(adj[static_cast<size_t>(x)].begin(), adj[static_cast<size_t>(x)].end());
      for (size_t i = 0; i < nbrs.size() && folds.empty(); ++i)
        for (size_t j = i + 1; j < nbrs.size() && folds.empty(); ++j)
          if (g.adjacent(proj[static_cast<size_t>(nbrs[i])], proj[static_cast<size_t>(nbrs[j])]))
            add_edge(nbrs[i], nbrs[j]);
      if (folds.empty()) {
        complete[static_cast<size_t>(x)] = 1;
        return;
      }
    }
  }
};

}  // namespace

UniversalBall universal_cover_ball(const Graph& g, int base_vertex, int radius) {
  if (base_vertex < 0 || base_vertex >= g.vertex_count())
    throw std::invalid_argument("universal_cover_ball: unknown base vertex");
  if (radius < 0) throw std::invalid_argument("universal_cover_ball: negative radius");
  if (!is_connected(g)) throw std::invalid_argument("universal_cover_ball: base graph must be connected");

  Development dev(g, base_vertex, radius);
  while (!dev.queue.empty()) {
    int x = dev.queue.front();
    dev.queue.pop_front();
    dev.complete_vertex(dev.find(x));
  }
  dev.drain_folds();

  // compact the surviving lifts in creation order; zero-padded names keep
  // index order and name order equal
  std::vector<int> live;
  for (int i = 0; i < static_cast<int>(dev.proj.size()); ++i)
    if (dev.alive(i)) live.push_back(i);
  int width = 1;
  for (size_t t = live.size(); t >= 10; t /= 10) ++width;
  std::map<int, std::string> lift_name;
  for (size_t c = 0; c < live.size(); ++c) {
    std::string num = std::to_string(c);
    lift_name[live[c]] = "u" + std::string(static_cast<size_t>(width) - num.size(), '0') + num;
  }

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (int i : live) {
    if (dev.adj[static_cast<size_t>(i)].empty()) isolated.push_back(lift_name[i]);
    for (int j : dev.adj[static_cast<size_t>(i)])
      if (i < j) edges.emplace_back(lift_name[i], lift_name[j]);
  }
  Graph cover = Graph::from_edges(isolated, edges);

  std::vector<std::pair<std::string, std::string>> proj_pairs;
  for (int i : live) proj_pairs.emplace_back(lift_name[i], g.name(dev.proj[static_cast<size_t>(i)]));
  GraphHom projection = make_hom(cover, g, proj_pairs);

  std::vector<int> depths = bfs_distances(cover, cover.require_index(lift_name[0]));

  std::vector<int> boundary;
  for (int i : live)
    if (!dev.complete[static_cast<size_t>(i)]) boundary.push_back(cover.require_index(lift_name[i]));
  std::sort(boundary.begin(), boundary.end());

  return UniversalBall{std::move(cover), std::move(projection), std::move(depths),
                       std::move(boundary)};
}

}  // namespace cliquedyn
