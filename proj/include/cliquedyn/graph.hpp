#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquedyn {

// Girth of a graph, with a distinguished value for acyclic graphs.
// Finite values are always >= 3.
class GirthValue {
public:
  static GirthValue infinite() { return GirthValue(0); }
  static GirthValue finite(int v) {
    if (v < 3) throw std::invalid_argument("girth must be >= 3");
    return GirthValue(v);
  }

  bool is_infinite() const { return v_ == 0; }
  int value() const {
    if (v_ == 0) throw std::logic_error("girth is infinite");
    return v_;
  }

  // Finite values order naturally; infinity compares greater than everything.
  bool operator==(const GirthValue&) const = default;
  bool operator<(const GirthValue& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return v_ < o.v_;
  }
  bool operator>=(const GirthValue& o) const { return !(*this < o); }

  std::string str() const { return v_ == 0 ? "INF" : std::to_string(v_); }

private:
  explicit GirthValue(int v) : v_(v) {}
  int v_;
};

// Finite undirected simple graph. Vertices carry stable text names; internally
// they are dense indices in lexicographic name order, so index order and name
// order always agree. Immutable after construction.
class Graph {
public:
  Graph() = default;

  // `vertices` may list isolated vertices; edge endpoints are added implicitly.
  // Rejects self-loops. Duplicate vertices/edges are fine.
  static Graph from_edges(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  long long edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const {
    check_index(v);
    return adj_[v];
  }
  int degree(int v) const {
    check_index(v);
    return static_cast<int>(adj_[v].size());
  }
  bool adjacent(int u, int v) const;

  const std::string& name(int v) const {
    check_index(v);
    return names_[v];
  }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;
  int require_index(std::string_view name) const;

  // Edges as sorted (u, v) index pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  // Identity comparison: same names and same edges. (Isomorphism lives in iso.hpp.)
  bool operator==(const Graph&) const = default;

private:
  void check_index(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex index out of range");
  }

  std::vector<std::string> names_;      // sorted, unique
  std::vector<std::vector<int>> adj_;   // sorted neighbor indices
  long long edge_count_ = 0;
};

// Subgraph induced on the given vertices (names are preserved).
Graph induced(const Graph& g, std::span<const int> keep);
Graph induced_by_names(const Graph& g, const std::vector<std::string>& keep);

// Length of a shortest cycle, or infinity for forests.
GirthValue girth(const Graph& g);

// Open neighborhood of v as an induced subgraph.
Graph neighborhood_graph(const Graph& g, int v);

// Minimum over all vertices of the girth of the vertex's open neighborhood.
// Throws on the empty graph. Parallel over vertices; result is order-free.
GirthValue local_girth(const Graph& g);

// Minimum over all vertices of the minimum degree within the vertex's open
// neighborhood. A vertex with an empty neighborhood contributes 0.
int local_min_degree(const Graph& g);

// True iff every open neighborhood is a cycle (connected, 2-regular, >= 3 vertices).
bool is_locally_cyclic(const Graph& g);

// G minus the vertices of degree exactly 1 (single simultaneous pass).
Graph prune_degree_one(const Graph& g);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

// Connected components, each a sorted list of vertex indices, ordered by
// smallest member.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace cliquedyn
