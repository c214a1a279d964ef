#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

// Canonical fingerprint of a graph: vertex count followed by the canonically
// relabelled, sorted edge list. Two graphs have equal fingerprints iff they
// are isomorphic, and the fingerprint is invariant under vertex renaming.
struct CanonicalForm {
  std::vector<std::int64_t> code;

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const { return code < o.code; }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const;
};

// A canonical form together with the vertex order realizing it:
// order[pos] = vertex index occupying canonical position pos.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> order;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// Witness bijection g -> h (as an index map) preserving adjacency and
// non-adjacency, or nullopt. The witness is verified before being returned.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

}  // namespace cliquedyn
