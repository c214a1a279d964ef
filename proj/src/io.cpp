#include "cliquedyn/io.hpp"

#include <sstream>
#include <stdexcept>

namespace cliquedyn {

namespace {

// strip comment, split on whitespace
std::vector<std::string> tokens_of_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of_line(line);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      isolated.push_back(toks[0]);
    } else if (toks.size() == 2) {
      edges.emplace_back(toks[0], toks[1]);
    } else {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected one or two tokens, got " +
                                  std::to_string(toks.size()));
    }
  }
  return Graph::from_edges(isolated, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  std::vector<char> touched(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : g.edges()) {
    touched[static_cast<size_t>(u)] = touched[static_cast<size_t>(v)] = 1;
    out += g.name(u) + " " + g.name(v) + "\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!touched[static_cast<size_t>(v)]) out += g.name(v) + "\n";
  return out;
}

namespace {

// bare where the language allows it, quoted otherwise
std::string dot_id(const std::string& name) {
  bool bare = !name.empty();
  for (size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    if (i == 0 && std::isdigit(static_cast<unsigned char>(c))) ok = false;
    if (!ok) bare = false;
  }
  if (bare) return name;
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  std::vector<char> touched(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : g.edges()) {
    touched[static_cast<size_t>(u)] = touched[static_cast<size_t>(v)] = 1;
    out += "  " + dot_id(g.name(u)) + " -- " + dot_id(g.name(v)) + ";\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!touched[static_cast<size_t>(v)]) out += "  " + dot_id(g.name(v)) + ";\n";
  out += "}\n";
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_pair_lines(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of_line(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw std::invalid_argument("pair file line " + std::to_string(lineno) +
                                  ": expected two tokens, got " + std::to_string(toks.size()));
    pairs.emplace_back(toks[0], toks[1]);
  }
  return pairs;
}

}  // namespace cliquedyn
