#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

// Plain-text edge lists: one record per line, '#' starts a comment, blank
// lines ignored. A line with two tokens is an edge, a single token declares
// an isolated vertex (harmless for names that also appear in edges).
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Graphviz output (undirected).
std::string write_dot(const Graph& g);

// Two whitespace-separated tokens per line, same comment rules; used for
// vertex maps and permutations.
std::vector<std::pair<std::string, std::string>> parse_pair_lines(const std::string& text);

}  // namespace cliquedyn
