#include "cliquedyn/generators.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cliquedyn {

namespace {

std::optional<long long> parse_strict_int(const std::string& s) {
  // canonical decimal only: no sign-only, no leading zeros, no "+", no "-0"
  if (s.empty()) return std::nullopt;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  if (s[i] == '0' && s.size() > i + 1) return std::nullopt;
  if (s == "-0") return std::nullopt;
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string pad(long long v, int width) {
  std::string num = std::to_string(v);
  if (static_cast<int>(num.size()) >= width) return num;
  return std::string(static_cast<size_t>(width) - num.size(), '0') + num;
}

// ---- tree-of-paths descriptor grammar ----

struct PathAddr {
  std::string root;              // "A" or "B"
  std::vector<long long> pos;    // matching positions along the descent
  std::string text;
};

[[noreturn]] void bad(const std::string& d, const std::string& why) {
  throw std::invalid_argument("bad descriptor '" + d + "': " + why);
}

// parentpos: the position at which this path is matched toward its parent
// (roots are matched to the central cycle at 0)
long long parentpos(const PathAddr& a) { return a.pos.empty() ? 0 : a.pos.back(); }

PathAddr parse_addr(const std::string& text, int L, int b, const std::string& d) {
  PathAddr a;
  a.text = text;
  std::vector<std::string> parts = split(text, '.');
  if (parts[0] != "A" && parts[0] != "B") bad(d, "path root must be A or B");
  a.root = parts[0];
  long long prev = 0;  // parentpos of the prefix
  for (size_t i = 1; i < parts.size(); ++i) {
    auto j = parse_strict_int(parts[i]);
    if (!j) bad(d, "malformed path component '" + parts[i] + "'");
    if (*j < -L || *j > L) bad(d, "path component out of range");
    if (*j == prev) bad(d, "path matched at its own parent position");
    a.pos.push_back(*j);
    prev = *j;
  }
  if (static_cast<int>(a.pos.size()) > b) bad(d, "path deeper than the branching bound");
  return a;
}

std::string vname(const std::string& p, long long j) { return "v|" + p + "|" + std::to_string(j); }
std::string sname(const std::string& p, long long n) { return "s|" + p + "|" + std::to_string(n); }
std::string qname(const std::string& p, long long n, long long t) {
  return "q|" + p + "|" + std::to_string(n) + "|" + std::to_string(t);
}
std::string wname(const std::string& c, long long a, long long t) {
  return "w|" + c + "|" + std::to_string(a) + "|" + std::to_string(t);
}

// Neighbors within one component (rooted at "A" or "B"): the root's own
// matching site at position 0 is owned by the central cycle and intentionally
// absent here; wrappers add whatever is glued there.
std::vector<std::string> t1_neighbors(const std::string& d, int L, int b) {
  std::vector<std::string> f = split(d, '|');
  std::vector<std::string> ns;
  if (f[0] == "v" && f.size() == 3) {
    PathAddr p = parse_addr(f[1], L, b, d);
    auto j = parse_strict_int(f[2]);
    if (!j || *j < -L || *j > L) bad(d, "position out of range");
    if (*j >= -L + 1) ns.push_back(sname(p.text, *j));
    if (*j + 1 <= L) ns.push_back(sname(p.text, *j + 1));
    if (*j == parentpos(p)) {
      if (!p.pos.empty()) {  // matched toward the parent path
        ns.push_back(wname(p.text, 0, 3));
        ns.push_back(wname(p.text, 1, 3));
      }
      // roots: the central site, contributed by the caller
    } else if (static_cast<int>(p.pos.size()) < b) {
      std::string child = p.text + "." + std::to_string(*j);
      ns.push_back(wname(child, 0, 1));
      ns.push_back(wname(child, 1, 1));
    }
  } else if (f[0] == "s" && f.size() == 3) {
    PathAddr p = parse_addr(f[1], L, b, d);
    auto n = parse_strict_int(f[2]);
    if (!n || *n < -L + 1 || *n > L) bad(d, "edge label out of range");
    ns.push_back(vname(p.text, *n - 1));
    ns.push_back(vname(p.text, *n));
    if (*n >= 1) ns.push_back(qname(p.text, *n, 1));
  } else if (f[0] == "q" && f.size() == 4) {
    PathAddr p = parse_addr(f[1], L, b, d);
    auto n = parse_strict_int(f[2]);
    auto t = parse_strict_int(f[3]);
    if (!n || *n < 1 || *n > L) bad(d, "chain label out of range");
    if (!t || *t < 1 || *t > *n) bad(d, "chain index out of range");
    ns.push_back(*t == 1 ? sname(p.text, *n) : qname(p.text, *n, *t - 1));
    if (*t < *n) ns.push_back(qname(p.text, *n, *t + 1));
  } else if (f[0] == "w" && f.size() == 4) {
    PathAddr c = parse_addr(f[1], L, b, d);
    if (c.pos.empty()) bad(d, "roots own no matching-site cycle here");
    auto a = parse_strict_int(f[2]);
    auto t = parse_strict_int(f[3]);
    if (!a || (*a != 0 && *a != 1)) bad(d, "arm index must be 0 or 1");
    if (!t || *t < 1 || *t > 3) bad(d, "arm position must be 1..3");
    long long j = c.pos.back();
    std::string parent = c.text.substr(0, c.text.rfind('.'));
    if (*t == 1) {
      ns.push_back(vname(parent, j));
      ns.push_back(wname(c.text, *a, 2));
    } else if (*t == 2) {
      ns.push_back(wname(c.text, *a, 1));
      ns.push_back(wname(c.text, *a, 3));
    } else {
      ns.push_back(wname(c.text, *a, 2));
      ns.push_back(vname(c.text, j));
    }
  } else {
    bad(d, "unknown descriptor kind");
  }
  std::sort(ns.begin(), ns.end());
  return ns;
}

std::vector<std::string> tree_t_neighbors(const std::string& d, int L, int b) {
  std::vector<std::string> f = split(d, '|');
  if (f[0] == "w" && f.size() == 4 && f[1] == "B") {
    // the central cycle, owned by root B; parent side is v|A|0
    auto a = parse_strict_int(f[2]);
    auto t = parse_strict_int(f[3]);
    if (!a || (*a != 0 && *a != 1)) bad(d, "arm index must be 0 or 1");
    if (!t || *t < 1 || *t > 3) bad(d, "arm position must be 1..3");
    std::vector<std::string> ns;
    if (*t == 1) {
      ns.push_back(vname("A", 0));
      ns.push_back(wname("B", *a, 2));
    } else if (*t == 2) {
      ns.push_back(wname("B", *a, 1));
      ns.push_back(wname("B", *a, 3));
    } else {
      ns.push_back(wname("B", *a, 2));
      ns.push_back(vname("B", 0));
    }
    std::sort(ns.begin(), ns.end());
    return ns;
  }
  std::vector<std::string> ns = t1_neighbors(d, L, b);
  if (d == vname("A", 0)) {
    ns.push_back(wname("B", 0, 1));
    ns.push_back(wname("B", 1, 1));
  } else if (d == vname("B", 0)) {
    ns.push_back(wname("B", 0, 3));
    ns.push_back(wname("B", 1, 3));
  }
  std::sort(ns.begin(), ns.end());
  return ns;
}

std::vector<std::string> t_prime_neighbors(const std::string& d, int L, int b) {
  if (d == "y;1") return {vname("A", 0), "y;2"};
  if (d == "y;2") return {"y;1", "y;3"};
  if (d == "y;3") return {vname("A", 0), "y;2"};
  std::vector<std::string> f = split(d, '|');
  if (f.size() >= 2 && (f[1] == "B" || f[1].rfind("B.", 0) == 0))
    bad(d, "only the A-side component exists here");
  std::vector<std::string> ns = t1_neighbors(d, L, b);
  if (d == vname("A", 0)) {
    ns.push_back("y;1");
    ns.push_back("y;3");
  }
  std::sort(ns.begin(), ns.end());
  return ns;
}

std::string x16(int i) { return "x;" + pad(((i % 16) + 16) % 16, 2); }

std::vector<std::string> t_double_prime_neighbors(const std::string& d, int L, int b) {
  if (d.rfind("x;", 0) == 0) {
    if (d.size() != 4 || !std::isdigit(static_cast<unsigned char>(d[2])) ||
        !std::isdigit(static_cast<unsigned char>(d[3])))
      bad(d, "cycle vertices are x;00..x;15");
    int i = (d[2] - '0') * 10 + (d[3] - '0');
    if (i > 15) bad(d, "cycle vertices are x;00..x;15");
    std::vector<std::string> ns{x16(i + 1), x16(i + 15)};
    if (i % 4 == 0) {
      std::string prefix = "T" + std::to_string(i / 4) + "!";
      for (const auto& n : t1_neighbors(vname("A", 0), L, b)) ns.push_back(prefix + n);
    }
    std::sort(ns.begin(), ns.end());
    return ns;
  }
  if (d.size() > 3 && d[0] == 'T' && d[1] >= '0' && d[1] <= '3' && d[2] == '!') {
    int c = d[1] - '0';
    std::string rest = d.substr(3);
    if (rest == vname("A", 0)) bad(d, "the glued vertex goes by its cycle name");
    std::vector<std::string> f = split(rest, '|');
    if (f.size() >= 2 && (f[1] == "B" || f[1].rfind("B.", 0) == 0))
      bad(d, "only the A-side component exists here");
    std::vector<std::string> ns;
    for (const auto& n : t1_neighbors(rest, L, b))
      ns.push_back(n == vname("A", 0) ? x16(4 * c) : "T" + std::to_string(c) + "!" + n);
    std::sort(ns.begin(), ns.end());
    return ns;
  }
  bad(d, "unknown descriptor kind");
}

Graph close_over(const GraphOracle& o) {
  // the truncations are finite: a huge radius just exhausts them
  return extract_ball(o, o.basepoint, std::numeric_limits<int>::max() / 2).graph;
}

void check_tree_params(int L, int b) {
  if (L < 1) throw std::invalid_argument("tree family: L must be at least 1");
  if (b < 0) throw std::invalid_argument("tree family: b must be nonnegative");
}

}  // namespace

GraphOracle tree_T_oracle(int L, int b) {
  check_tree_params(L, b);
  return GraphOracle{[L, b](const std::string& d) { return tree_t_neighbors(d, L, b); },
                     vname("A", 0)};
}

Graph tree_T(int L, int b) { return close_over(tree_T_oracle(L, b)); }

GraphOracle t_prime_oracle(int L, int b) {
  check_tree_params(L, b);
  return GraphOracle{[L, b](const std::string& d) { return t_prime_neighbors(d, L, b); },
                     vname("A", 0)};
}

Graph t_prime(int L, int b) { return close_over(t_prime_oracle(L, b)); }

Graph t_double_prime(int L, int b) {
  check_tree_params(L, b);
  return close_over(GraphOracle{
      [L, b](const std::string& d) { return t_double_prime_neighbors(d, L, b); }, "x;00"});
}

std::vector<std::pair<std::string, std::string>> t_double_prime_symmetry(int L, int b) {
  Graph g = t_double_prime(L, b);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string& n = g.name(v);
    if (n.rfind("x;", 0) == 0) {
      int i = (n[2] - '0') * 10 + (n[3] - '0');
      pairs.emplace_back(n, x16(i + 8));
    } else {
      // swap opposite copies: T0<->T2, T1<->T3
      int c = n[1] - '0';
      pairs.emplace_back(n, "T" + std::to_string((c + 2) % 4) + "!" + n.substr(3));
    }
  }
  return pairs;
}

std::string tree_t_shift(const std::string& descriptor, int delta) {
  std::string prefix;
  std::string d = descriptor;
  if (d.size() > 3 && d[0] == 'T' && d[1] >= '0' && d[1] <= '3' && d[2] == '!') {
    prefix = d.substr(0, 3);
    d = d.substr(3);
  }
  if (d.rfind("x;", 0) == 0 || d.rfind("y;", 0) == 0) return descriptor;

  // The shifted image of a path address. Root A translates onto itself; the
  // co-root B is the path matched at position 0 of A, so its image is the
  // path matched at position delta; and whenever a shifted matching position
  // lands on 0 of A, that path IS the co-root.
  auto shift_addr = [&](const std::string& addr) {
    std::vector<std::string> parts = split(addr, '.');
    auto join = [&](const std::string& cur, long long p) {
      return (cur == "A" && p == 0) ? std::string("B") : cur + "." + std::to_string(p);
    };
    std::string cur = "A";
    if (parts[0] == "B") cur = join("A", delta);
    for (size_t i = 1; i < parts.size(); ++i) {
      auto j = parse_strict_int(parts[i]);
      if (!j) throw std::invalid_argument("tree_t_shift: malformed address in " + descriptor);
      cur = join(cur, *j + delta);
    }
    return cur;
  };

  std::vector<std::string> f = split(d, '|');
  auto num = [&](const std::string& s) {
    auto v = parse_strict_int(s);
    if (!v) throw std::invalid_argument("tree_t_shift: malformed descriptor " + descriptor);
    return *v;
  };
  std::string out;
  if (f[0] == "v" && f.size() == 3)
    out = vname(shift_addr(f[1]), num(f[2]) + delta);
  else if (f[0] == "s" && f.size() == 3)
    out = sname(shift_addr(f[1]), num(f[2]) + delta);
  else if (f[0] == "q" && f.size() == 4)
    out = qname(shift_addr(f[1]), num(f[2]) + delta, num(f[3]));
  else if (f[0] == "w" && f.size() == 4)
    out = wname(shift_addr(f[1]), num(f[2]), num(f[3]));
  else
    throw std::invalid_argument("tree_t_shift: malformed descriptor " + descriptor);
  return prefix + out;
}

Graph caterpillar(const std::vector<int>& legs) {
  int m = static_cast<int>(legs.size());
  if (m < 1 || m > 999) throw std::invalid_argument("caterpillar: 1..999 positions");
  for (int len : legs)
    if (len < 0 || len > 99) throw std::invalid_argument("caterpillar: leg lengths must be 0..99");

  std::vector<std::pair<std::string, std::string>> edges;
  auto t = [&](int i) { return "t" + pad(i, 3); };
  auto bo = [&](int i) { return "b" + pad(i, 3); };
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(t(i), t(i + 1));
  for (int i = 0; i < m; ++i) edges.emplace_back(bo(i), bo(i + 1));
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(t(i), bo(i));
    edges.emplace_back(t(i), bo(i + 1));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= legs[static_cast<size_t>(i)]; ++j)
      edges.emplace_back(j == 1 ? t(i) : "l" + pad(i, 3) + ";" + pad(j - 1, 2),
                         "l" + pad(i, 3) + ";" + pad(j, 2));
  return Graph::from_edges({}, edges);
}

namespace {

// Layered development of the d-regular triangulation: each rim vertex gets a
// consecutive fan of fresh neighbors in the next layer, consecutive rim
// vertices sharing exactly one fan corner. Interior degrees close at d and
// interior neighborhoods close into C_d.
struct TriDev {
  int d;
  std::vector<std::vector<std::string>> layers;
  std::map<std::string, std::vector<std::string>> adj;
  std::map<std::string, int> parents;

  explicit TriDev(int degree) : d(degree) {
    layers.push_back({"h"});
    adj["h"] = {};
    parents["h"] = 0;
  }

  void link(const std::string& a, const std::string& b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::string fresh(int layer, int idx) { return "t" + pad(layer, 2) + ";" + pad(idx, 6); }

  void place_next() {
    int k = static_cast<int>(layers.size()) - 1;
    const std::vector<std::string> rim = layers[static_cast<size_t>(k)];
    std::vector<std::string> next;
    if (k == 0) {
      for (int i = 0; i < d; ++i) next.push_back(fresh(1, i));
      for (int i = 0; i < d; ++i) {
        link("h", next[static_cast<size_t>(i)]);
        parents[next[static_cast<size_t>(i)]] = 1;
      }
    } else {
      int m = static_cast<int>(rim.size());
      int idx = 0;
      std::vector<std::vector<int>> fan(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) {
        int f = d - 2 - parents.at(rim[static_cast<size_t>(i)]);
        if (f < 2) throw std::logic_error("triangulation development: fan collapsed");
        int start = (i == 0) ? 0 : 1;            // first slot shared with the previous fan
        int end = (i == m - 1) ? f - 1 : f;      // last fan closes onto slot 0
        if (i > 0) fan[static_cast<size_t>(i)].push_back(fan[static_cast<size_t>(i - 1)].back());
        for (int s = start; s < end; ++s) {
          next.push_back(fresh(k + 1, idx++));
          fan[static_cast<size_t>(i)].push_back(static_cast<int>(next.size()) - 1);
        }
        if (i == m - 1) fan[static_cast<size_t>(i)].push_back(0);
      }
      for (const auto& n : next) parents[n] = 0;
      for (int i = 0; i < m; ++i)
        for (int slot : fan[static_cast<size_t>(i)]) {
          link(rim[static_cast<size_t>(i)], next[static_cast<size_t>(slot)]);
          ++parents[next[static_cast<size_t>(slot)]];
        }
    }
    int sz = static_cast<int>(next.size());
    for (int i = 0; i < sz; ++i) link(next[static_cast<size_t>(i)], next[static_cast<size_t>((i + 1) % sz)]);
    layers.push_back(std::move(next));
  }

  void develop_to(int layer) {
    while (static_cast<int>(layers.size()) <= layer) place_next();
  }
};

int tri_layer_of(const std::string& d) {
  if (d == "h") return 0;
  if (d.size() == 10 && d[0] == 't' && d[3] == ';') {
    bool digits = true;
    for (size_t i : {1ul, 2ul, 4ul, 5ul, 6ul, 7ul, 8ul, 9ul})
      if (!std::isdigit(static_cast<unsigned char>(d[i]))) digits = false;
    if (digits) return (d[1] - '0') * 10 + (d[2] - '0');
  }
  throw std::invalid_argument("bad triangulation descriptor '" + d + "'");
}

}  // namespace

GraphOracle triangulation_oracle(int d) {
  if (d < 6) throw std::invalid_argument("triangulation: degree must be at least 6");
  struct State {
    std::mutex mu;
    TriDev dev;
    explicit State(int degree) : dev(degree) {}
  };
  auto state = std::make_shared<State>(d);
  return GraphOracle{
      [state](const std::string& desc) {
        int layer = tri_layer_of(desc);
        std::lock_guard<std::mutex> lock(state->mu);
        state->dev.develop_to(layer + 1);
        auto it = state->dev.adj.find(desc);
        if (it == state->dev.adj.end())
          throw std::invalid_argument("bad triangulation descriptor '" + desc + "'");
        std::vector<std::string> out = it->second;
        std::sort(out.begin(), out.end());
        return out;
      },
      "h"};
}

Ball triangulation(int d, int r) {
  if (r < 0) throw std::invalid_argument("triangulation: negative radius");
  return extract_ball(triangulation_oracle(d), "h", r);
}

GraphOracle path_oracle() {
  return GraphOracle{[](const std::string& d) {
                       auto v = parse_strict_int(d);
                       if (!v) throw std::invalid_argument("bad path descriptor '" + d + "'");
                       return std::vector<std::string>{std::to_string(*v - 1),
                                                       std::to_string(*v + 1)};
                     },
                     "0"};
}

GraphOracle tree3_oracle() {
  return GraphOracle{[](const std::string& d) {
                       if (d.empty() || d[0] != 'r' ||
                           (d.size() > 1 && (d[1] < '0' || d[1] > '2')))
                         throw std::invalid_argument("bad tree descriptor '" + d + "'");
                       for (size_t i = 2; i < d.size(); ++i)
                         if (d[i] != '0' && d[i] != '1')
                           throw std::invalid_argument("bad tree descriptor '" + d + "'");
                       std::vector<std::string> ns;
                       if (d == "r") {
                         ns = {"r0", "r1", "r2"};
                       } else {
                         ns.push_back(d.substr(0, d.size() - 1));
                         ns.push_back(d + "0");
                         ns.push_back(d + "1");
                       }
                       std::sort(ns.begin(), ns.end());
                       return ns;
                     },
                     "r"};
}

namespace {

long long need_int(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("generate: missing parameter '" + key + "'");
  auto v = parse_strict_int(it->second);
  if (!v) throw std::invalid_argument("generate: parameter '" + key + "' is not an integer");
  return *v;
}

long long opt_int(const std::map<std::string, std::string>& params, const std::string& key,
                  long long fallback) {
  return params.count(key) ? need_int(params, key) : fallback;
}

void only_keys(const std::map<std::string, std::string>& params,
               const std::vector<std::string>& allowed) {
  for (const auto& [k, v] : params)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw std::invalid_argument("generate: unknown parameter '" + k + "'");
}

}  // namespace

Graph generate(const std::string& family, const std::map<std::string, std::string>& params) {
  if (family == "tree_T") {
    only_keys(params, {"L", "b"});
    return tree_T(static_cast<int>(need_int(params, "L")), static_cast<int>(need_int(params, "b")));
  }
  if (family == "t_prime") {
    only_keys(params, {"L", "b"});
    return t_prime(static_cast<int>(need_int(params, "L")),
                   static_cast<int>(opt_int(params, "b", 1)));
  }
  if (family == "t_double_prime") {
    only_keys(params, {"L", "b"});
    return t_double_prime(static_cast<int>(need_int(params, "L")),
                          static_cast<int>(opt_int(params, "b", 1)));
  }
  if (family == "caterpillar") {
    only_keys(params, {"legs"});
    auto it = params.find("legs");
    if (it == params.end()) throw std::invalid_argument("generate: missing parameter 'legs'");
    std::vector<int> legs;
    for (const auto& tok : split(it->second, ',')) {
      auto v = parse_strict_int(tok);
      if (!v) throw std::invalid_argument("generate: bad leg length '" + tok + "'");
      legs.push_back(static_cast<int>(*v));
    }
    return caterpillar(legs);
  }
  if (family == "triangulation") {
    only_keys(params, {"d", "r"});
    return triangulation(static_cast<int>(need_int(params, "d")),
                         static_cast<int>(need_int(params, "r")))
        .graph;
  }
  if (family == "path") {
    only_keys(params, {"n"});
    long long n = need_int(params, "n");
    if (n < 1 || n > 100000) throw std::invalid_argument("generate: path length out of range");
    int width = static_cast<int>(std::to_string(n - 1).size());
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> isolated;
    for (long long i = 0; i + 1 < n; ++i)
      edges.emplace_back("p" + pad(i, width), "p" + pad(i + 1, width));
    if (n == 1) isolated.push_back("p0");
    return Graph::from_edges(isolated, edges);
  }
  if (family == "tree3") {
    only_keys(params, {"r"});
    long long r = need_int(params, "r");
    if (r < 0 || r > 20) throw std::invalid_argument("generate: tree radius out of range");
    return extract_ball(tree3_oracle(), "r", static_cast<int>(r)).graph;
  }
  throw std::invalid_argument("generate: unknown family '" + family + "'");
}

}  // namespace cliquedyn
