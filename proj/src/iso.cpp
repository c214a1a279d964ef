#include "cliquedyn/iso.hpp"

#include <algorithm>
#include <numeric>

namespace cliquedyn {

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const {
  std::size_t h = 1469598103934665603ull;  // FNV offset basis
  for (std::int64_t v : f.code) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Index-based view used throughout the search. Vertex names play no role in
// canonicalization; only the adjacency structure does.
struct IdxGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted

  bool adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }
};

IdxGraph to_idx(const Graph& g) {
  IdxGraph ig;
  ig.n = g.vertex_count();
  ig.adj.resize(ig.n);
  for (int v = 0; v < ig.n; ++v) ig.adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return ig;
}

IdxGraph complement_of(const IdxGraph& g) {
  IdxGraph c;
  c.n = g.n;
  c.adj.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    const auto& nb = g.adj[v];
    std::size_t p = 0;
    for (int u = 0; u < g.n; ++u) {
      if (p < nb.size() && nb[p] == u) {
        ++p;
        continue;
      }
      if (u != v) c.adj[v].push_back(u);
    }
  }
  return c;
}

long long edge_count(const IdxGraph& g) {
  long long m = 0;
  for (const auto& nb : g.adj) m += static_cast<long long>(nb.size());
  return m / 2;
}

std::vector<std::vector<int>> idx_components(const IdxGraph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.push_back({});
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int w : g.adj[u])
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

// Equitable refinement. Colors are ranks of (old color, sorted multiset of
// neighbor colors) signatures; ranking by signature keeps the result invariant
// under vertex relabelling. Iterates until the number of classes is stable.
std::vector<int> refine(const IdxGraph& g, std::vector<int> color) {
  const int n = g.n;
  if (n == 0) return color;
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.reserve(g.adj[v].size() + 1);
      s.push_back(color[v]);
      for (int w : g.adj[v]) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&sig](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(n);
    int c = 0;
    next[order[0]] = 0;
    for (int i = 1; i < n; ++i) {
      if (sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    int new_classes = c + 1;
    color.swap(next);
    if (new_classes == classes || new_classes == n) return color;
    classes = new_classes;
  }
}

std::vector<int> individualize(const IdxGraph& g, const std::vector<int>& color, int v) {
  // Put v in a fresh class just ahead of its old cellmates, then re-refine.
  std::vector<int> c(color.size());
  for (std::size_t u = 0; u < color.size(); ++u) c[u] = 2 * color[u] + 1;
  c[v] -= 1;
  return refine(g, std::move(c));
}

std::vector<std::int64_t> encode_under(const IdxGraph& g, const std::vector<int>& label) {
  // label[v] = canonical position of v
  std::vector<std::int64_t> code;
  code.reserve(1 + 2 * static_cast<std::size_t>(edge_count(g)));
  code.push_back(g.n);
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v]) {
      int a = label[v], b = label[w];
      if (a < b) es.emplace_back(a, b);
    }
  std::sort(es.begin(), es.end());
  for (auto [a, b] : es) {
    code.push_back(a);
    code.push_back(b);
  }
  return code;
}

struct SearchCtx {
  const IdxGraph* g = nullptr;
  std::vector<std::int64_t> best_code;
  std::vector<int> best_order;  // order[pos] = vertex
  bool have_best = false;
  std::vector<std::int64_t> first_code;
  std::vector<int> first_label;  // label[v] = pos
  bool have_first = false;
  std::vector<std::vector<int>> autos;  // discovered automorphisms (vertex -> vertex)
  long long leaves = 0;
};

bool is_automorphism(const IdxGraph& g, const std::vector<int>& p) {
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      if (!g.adjacent(p[v], p[w])) return false;
  return true;
}

void record_leaf(SearchCtx& ctx, const std::vector<int>& color) {
  const IdxGraph& g = *ctx.g;
  if (++ctx.leaves > 5'000'000)
    throw std::logic_error("canonical labeling search exploded; automorphism pruning failed");
  std::vector<int> label = color;  // discrete: color == position
  auto code = encode_under(g, label);

  if (!ctx.have_first) {
    ctx.have_first = true;
    ctx.first_code = code;
    ctx.first_label = label;
  } else if (code == ctx.first_code) {
    // Two labelings producing identical codes compose to an automorphism.
    std::vector<int> first_order(g.n), perm(g.n);
    for (int v = 0; v < g.n; ++v) first_order[ctx.first_label[v]] = v;
    for (int v = 0; v < g.n; ++v) perm[v] = first_order[label[v]];
    if (!is_automorphism(g, perm))
      throw std::logic_error("canonical labeling produced a bogus automorphism");
    ctx.autos.push_back(std::move(perm));
  }

  if (!ctx.have_best || code < ctx.best_code) {
    ctx.best_code = std::move(code);
    ctx.best_order.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) ctx.best_order[label[v]] = v;
    ctx.have_best = true;
  }
}

int pick_target_cell(const std::vector<int>& color, int n) {
  // smallest non-singleton cell; ties broken by lowest color id
  std::vector<int> size(n, 0);
  for (int v = 0; v < n; ++v) ++size[color[v]];
  int best = -1, best_size = n + 1;
  for (int c = 0; c < n; ++c)
    if (size[c] >= 2 && size[c] < best_size) {
      best = c;
      best_size = size[c];
    }
  return best;
}

void search(SearchCtx& ctx, const std::vector<int>& color, std::vector<int>& prefix) {
  const IdxGraph& g = *ctx.g;
  const int n = g.n;
  int cell = pick_target_cell(color, n);
  if (cell < 0) {
    record_leaf(ctx, color);
    return;
  }
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (color[v] == cell) candidates.push_back(v);

  std::vector<int> tried;
  for (int v : candidates) {
    // Skip v if a known automorphism fixing the current prefix pointwise maps
    // a previously tried candidate into it.
    if (!tried.empty()) {
      std::vector<const std::vector<int>*> usable;
      for (const auto& a : ctx.autos) {
        bool fixes = true;
        for (int p : prefix)
          if (a[p] != p) {
            fixes = false;
            break;
          }
        if (fixes) usable.push_back(&a);
      }
      if (!usable.empty()) {
        std::vector<char> in_orbit(n, 0);
        std::vector<int> stack;
        for (int t : tried) {
          if (!in_orbit[t]) {
            in_orbit[t] = 1;
            stack.push_back(t);
          }
        }
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (const auto* a : usable) {
            if (!in_orbit[(*a)[u]]) {
              in_orbit[(*a)[u]] = 1;
              stack.push_back((*a)[u]);
            }
          }
        }
        if (in_orbit[v]) continue;
      }
    }
    prefix.push_back(v);
    search(ctx, individualize(g, color, v), prefix);
    prefix.pop_back();
    tried.push_back(v);
  }
}

// Canonical order of a connected graph by individualization-refinement.
std::vector<int> mckay_order(const IdxGraph& g) {
  if (g.n == 0) return {};
  SearchCtx ctx;
  ctx.g = &g;
  std::vector<int> prefix;
  search(ctx, refine(g, std::vector<int>(g.n, 0)), prefix);
  return ctx.best_order;
}

struct IdxLabeling {
  std::vector<std::int64_t> code;
  std::vector<int> order;
};

IdxLabeling canon_idx(const IdxGraph& g);

// Canonical order of a connected graph, routing dense graphs through their
// complement when that is cheaper. A canonical order for the complement is a
// canonical order for the graph (they share automorphisms), and the route is
// isomorphism-invariant, so fingerprints stay comparable.
std::vector<int> connected_order(const IdxGraph& g) {
  if (g.n >= 3) {
    long long m = edge_count(g);
    long long mc = static_cast<long long>(g.n) * (g.n - 1) / 2 - m;
    if (mc < m) {
      IdxGraph c = complement_of(g);
      if (idx_components(c).size() > 1) return canon_idx(c).order;
      return mckay_order(c);
    }
  }
  return mckay_order(g);
}

// Full pipeline: split into components, canonicalize each, sort component
// codes, concatenate. Equal codes mean isomorphic components, so their
// relative order cannot affect the final fingerprint; the original smallest
// vertex index breaks the tie to keep the returned order itself stable.
IdxLabeling canon_idx(const IdxGraph& g) {
  auto comps = idx_components(g);
  struct Part {
    std::vector<std::int64_t> code;
    std::vector<int> order;  // global vertex ids in canonical position order
    int min_vertex;
  };
  std::vector<Part> parts;
  for (const auto& comp : comps) {
    IdxGraph sub;
    sub.n = static_cast<int>(comp.size());
    sub.adj.resize(sub.n);
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < sub.n; ++i) local[comp[i]] = i;
    for (int i = 0; i < sub.n; ++i)
      for (int w : g.adj[comp[i]])
        if (local[w] >= 0) sub.adj[i].push_back(local[w]);
    for (auto& nb : sub.adj) std::sort(nb.begin(), nb.end());

    std::vector<int> ord = connected_order(sub);
    std::vector<int> label(sub.n);
    for (int pos = 0; pos < sub.n; ++pos) label[ord[pos]] = pos;
    Part p;
    p.code = encode_under(sub, label);
    p.order.reserve(sub.n);
    for (int pos = 0; pos < sub.n; ++pos) p.order.push_back(comp[ord[pos]]);
    p.min_vertex = comp[0];
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.code != b.code) return a.code < b.code;
    return a.min_vertex < b.min_vertex;
  });

  IdxLabeling out;
  out.order.reserve(g.n);
  for (const auto& p : parts) out.order.insert(out.order.end(), p.order.begin(), p.order.end());
  std::vector<int> label(g.n);
  for (int pos = 0; pos < g.n; ++pos) label[out.order[pos]] = pos;
  out.code = encode_under(g, label);
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  IdxLabeling l = canon_idx(to_idx(g));
  return CanonicalLabeling{CanonicalForm{std::move(l.code)}, std::move(l.order)};
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  CanonicalLabeling cg = canonical_labeling(g);
  CanonicalLabeling ch = canonical_labeling(h);
  if (!(cg.form == ch.form)) return std::nullopt;

  std::vector<int> map(g.vertex_count());
  for (int pos = 0; pos < g.vertex_count(); ++pos) map[cg.order[pos]] = ch.order[pos];

  // Verify before returning: a witness must preserve adjacency exactly.
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v))
      if (!h.adjacent(map[v], map[w]))
        throw std::logic_error("internal error: canonical forms agreed but witness failed");
  return map;
}

}  // namespace cliquedyn
