#include "cliquedyn/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace cliquedyn {

GraphOracle oracle_from_graph(Graph g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("oracle_from_graph: empty graph");
  auto shared = std::make_shared<Graph>(std::move(g));
  std::string base = shared->name(0);
  return GraphOracle{
      [shared](const std::string& d) {
        int v = shared->require_index(d);
        std::vector<std::string> out;
        for (int u : shared->neighbors(v)) out.push_back(shared->name(u));
        return out;
      },
      base};
}

Ball extract_ball(const GraphOracle& o, const std::string& v0, int radius) {
  if (radius < 0) throw std::invalid_argument("extract_ball: negative radius");
  if (!o.neighbors) throw std::invalid_argument("extract_ball: oracle has no neighbor function");

  std::map<std::string, int> id;
  std::vector<std::string> name;
  std::vector<int> depth;
  std::vector<std::vector<std::string>> nbrs;  // normalized neighbor lists

  auto intern = [&](const std::string& d, int dep) {
    auto [it, inserted] = id.emplace(d, static_cast<int>(name.size()));
    if (inserted) {
      name.push_back(d);
      depth.push_back(dep);
      nbrs.emplace_back();
    }
    return it->second;
  };

  intern(v0, 0);
  // processing in intern order is breadth-first: fresh vertices are only ever
  // interned one level deeper than the vertex being expanded
  for (size_t head = 0; head < name.size(); ++head) {
    int x = static_cast<int>(head);
    std::vector<std::string> raw = o.neighbors(name[static_cast<size_t>(x)]);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (const auto& w : raw)
      if (w == name[static_cast<size_t>(x)])
        throw std::runtime_error("oracle reports a self-loop at '" + w + "'");
    nbrs[static_cast<size_t>(x)] = raw;
    if (depth[static_cast<size_t>(x)] < radius)
      for (const auto& w : raw) intern(w, depth[static_cast<size_t>(x)] + 1);
  }

  // symmetry audit over the extracted window: whenever both endpoints were
  // queried, each must list the other or neither may
  for (size_t x = 0; x < name.size(); ++x)
    for (const auto& w : nbrs[x]) {
      auto it = id.find(w);
      if (it == id.end()) continue;
      const auto& back = nbrs[static_cast<size_t>(it->second)];
      if (!std::binary_search(back.begin(), back.end(), name[x]))
        throw std::runtime_error("oracle symmetry violation between '" + name[x] + "' and '" + w +
                                 "'");
    }

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (size_t x = 0; x < name.size(); ++x) {
    bool any = false;
    for (const auto& w : nbrs[x]) {
      if (!id.count(w)) continue;
      any = true;
      if (name[x] < w) edges.emplace_back(name[x], w);
    }
    if (!any) isolated.push_back(name[x]);
  }

  Ball ball;
  ball.graph = Graph::from_edges(isolated, edges);
  ball.center = ball.graph.require_index(v0);
  ball.radius = radius;
  ball.depths.assign(static_cast<size_t>(ball.graph.vertex_count()), -1);
  for (size_t x = 0; x < name.size(); ++x)
    ball.depths[static_cast<size_t>(ball.graph.require_index(name[x]))] = depth[x];
  for (int v = 0; v < ball.graph.vertex_count(); ++v)
    if (ball.depths[static_cast<size_t>(v)] == radius) ball.boundary.push_back(v);
  return ball;
}

std::string clique_descriptor(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i];
  }
  out += "}";
  return out;
}

std::vector<std::string> parse_clique_descriptor(const std::string& d) {
  if (d.size() < 2 || d.front() != '{' || d.back() != '}')
    throw std::invalid_argument("clique descriptor must be brace-delimited: " + d);
  std::vector<std::string> members;
  std::string cur;
  int nest = 0;
  for (size_t i = 1; i + 1 < d.size(); ++i) {
    char c = d[i];
    if (c == '{') ++nest;
    if (c == '}') --nest;
    if (c == ',' && nest == 0) {
      members.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  members.push_back(cur);
  for (const auto& m : members)
    if (m.empty()) throw std::invalid_argument("clique descriptor has an empty member: " + d);
  return members;
}

namespace {

// The finite subgraph certain to contain every clique meeting the seed set,
// with its maximality structure intact: cliques meeting the seeds lie inside
// N[seeds], and any vertex witnessing non-maximality lies one step further.
Graph local_patch(const GraphOracle& o, const std::vector<std::string>& seeds) {
  std::set<std::string> inner(seeds.begin(), seeds.end());
  std::map<std::string, std::vector<std::string>> nbrs;
  auto query = [&](const std::string& d) {
    auto [it, inserted] = nbrs.emplace(d, std::vector<std::string>{});
    if (inserted) {
      it->second = o.neighbors(d);
      std::sort(it->second.begin(), it->second.end());
      it->second.erase(std::unique(it->second.begin(), it->second.end()), it->second.end());
    }
    return it;
  };
  for (const auto& s : seeds)
    for (const auto& w : query(s)->second) inner.insert(w);
  std::set<std::string> outer = inner;
  for (const auto& v : inner)
    for (const auto& w : query(v)->second) outer.insert(w);
  for (const auto& v : outer) query(v);

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (const auto& v : outer) {
    bool any = false;
    for (const auto& w : nbrs[v]) {
      if (!outer.count(w)) continue;
      any = true;
      if (v < w) edges.emplace_back(v, w);
    }
    if (!any) isolated.push_back(v);
  }
  return Graph::from_edges(isolated, edges);
}

}  // namespace

GraphOracle clique_oracle(const GraphOracle& o) {
  auto base = std::make_shared<GraphOracle>(o);

  auto neighbor_fn = [base](const std::string& q) {
    std::vector<std::string> members = parse_clique_descriptor(q);
    Graph patch = local_patch(*base, members);
    std::vector<int> member_idx;
    for (const auto& m : members) member_idx.push_back(patch.require_index(m));
    std::sort(member_idx.begin(), member_idx.end());

    std::vector<std::string> out;
    bool found_self = false;
    for (const auto& clique : maximal_cliques(patch)) {
      bool meets = false;
      for (int v : clique)
        if (std::binary_search(member_idx.begin(), member_idx.end(), v)) meets = true;
      if (!meets) continue;
      if (clique == member_idx) {
        found_self = true;
        continue;
      }
      std::vector<std::string> names;
      for (int v : clique) names.push_back(patch.name(v));
      out.push_back(clique_descriptor(std::move(names)));
    }
    if (!found_self)
      throw std::runtime_error("clique oracle queried with a non-clique descriptor: " + q);
    std::sort(out.begin(), out.end());
    return out;
  };

  // least clique through the old basepoint
  Graph patch = local_patch(*base, {base->basepoint});
  int b = patch.require_index(base->basepoint);
  std::string least;
  for (const auto& clique : maximal_cliques(patch)) {
    if (!std::binary_search(clique.begin(), clique.end(), b)) continue;
    std::vector<std::string> names;
    for (int v : clique) names.push_back(patch.name(v));
    std::string d = clique_descriptor(std::move(names));
    if (least.empty() || d < least) least = d;
  }
  if (least.empty()) throw std::logic_error("clique_oracle: basepoint lies in no clique");
  return GraphOracle{neighbor_fn, least};
}

TrustedIterate::TrustedIterate(Ball window, std::vector<CliqueGraphResult> levels, int trust_radius)
    : window_(std::move(window)), levels_(std::move(levels)), trust_radius_(trust_radius) {
  depth_ = window_.depths;
  for (const auto& level : levels_) {
    std::vector<int> next(level.cliques.size());
    for (size_t i = 0; i < level.cliques.size(); ++i) {
      int d = 0;
      for (int m : level.cliques[i]) d = std::max(d, depth_[static_cast<size_t>(m)]);
      next[i] = d;
    }
    depth_ = std::move(next);
  }
  names_.resize(levels_.size() + 1);
}

const Graph& TrustedIterate::graph() const {
  return levels_.empty() ? window_.graph : levels_.back().graph;
}

std::vector<int> TrustedIterate::provenance(int v) const {
  std::vector<int> cur{v};
  for (size_t j = levels_.size(); j > 0; --j) {
    std::set<int> prev;
    for (int x : cur)
      for (int m : levels_[j - 1].cliques[static_cast<size_t>(x)]) prev.insert(m);
    cur.assign(prev.begin(), prev.end());
  }
  return cur;
}

std::string TrustedIterate::name_at(int level, int v) const {
  auto& table = names_[static_cast<size_t>(level)];
  if (table.empty())
    table.resize(level == 0 ? static_cast<size_t>(window_.graph.vertex_count())
                            : levels_[static_cast<size_t>(level - 1)].cliques.size());
  auto& slot = table[static_cast<size_t>(v)];
  if (!slot.empty()) return slot;
  if (level == 0) {
    slot = window_.graph.name(v);
  } else {
    std::vector<std::string> parts;
    for (int m : levels_[static_cast<size_t>(level - 1)].cliques[static_cast<size_t>(v)])
      parts.push_back(name_at(level - 1, m));
    slot = clique_descriptor(std::move(parts));
  }
  return slot;
}

std::string TrustedIterate::structural_name(int v) const {
  return name_at(static_cast<int>(levels_.size()), v);
}

Graph TrustedIterate::trusted_region(int t) const {
  if (t > trust_radius_)
    throw std::invalid_argument("trusted_region: requested radius exceeds the trust radius");
  const Graph& g = graph();
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (depth_[static_cast<size_t>(v)] <= t) keep.push_back(v);

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (int v : keep) {
    bool any = false;
    for (int u : g.neighbors(v)) {
      if (depth_[static_cast<size_t>(u)] > t) continue;
      any = true;
      if (v < u) edges.emplace_back(structural_name(v), structural_name(u));
    }
    if (!any) isolated.push_back(structural_name(v));
  }
  return Graph::from_edges(isolated, edges);
}

TrustedIterate trusted_iterate(const GraphOracle& o, const std::string& v0, int radius, int steps) {
  if (steps < 0) throw std::invalid_argument("trusted_iterate: negative step count");
  if (radius <= 2 * steps)
    throw std::invalid_argument("trusted_iterate: radius must exceed twice the step count");
  Ball window = extract_ball(o, v0, radius);
  std::vector<CliqueGraphResult> levels;
  const Graph* cur = &window.graph;
  for (int j = 0; j < steps; ++j) {
    levels.push_back(clique_graph(*cur));
    cur = &levels.back().graph;
  }
  return TrustedIterate(std::move(window), std::move(levels), radius - 2 * steps);
}

}  // namespace cliquedyn
