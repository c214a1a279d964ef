// command-line front end: edge lists in, reports/edge lists/dot out
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/covers.hpp"
#include "cliquedyn/dynamics.hpp"
#include "cliquedyn/generators.hpp"
#include "cliquedyn/graph.hpp"
#include "cliquedyn/io.hpp"

namespace {

using cliquedyn::Graph;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return cliquedyn::parse_edge_list(slurp(path)); }

void emit_graph(const Graph& g, bool dot) {
  std::cout << (dot ? cliquedyn::write_dot(g) : cliquedyn::serialize_edge_list(g));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique graph dynamics toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family instance as an edge list");
  std::string gen_family;
  std::vector<std::string> gen_params;
  bool gen_dot = false;
  gen->add_option("--family", gen_family, "family name")->required();
  gen->add_option("--param", gen_params, "key=value parameter (repeatable)");
  gen->add_flag("--dot", gen_dot, "emit DOT instead of an edge list");

  // cliques
  auto* cliques_cmd = app.add_subcommand("cliques", "list the maximal cliques, one per line");
  std::string cliques_file;
  cliques_cmd->add_option("file", cliques_file, "edge-list file")->required();

  // kgraph
  auto* kgraph = app.add_subcommand("kgraph", "clique graph (iterated with -n)");
  std::string kgraph_file;
  int kgraph_n = 1;
  bool kgraph_dot = false;
  kgraph->add_option("file", kgraph_file, "edge-list file")->required();
  kgraph->add_option("-n", kgraph_n, "number of applications")->check(CLI::NonNegativeNumber);
  kgraph->add_flag("--dot", kgraph_dot, "emit DOT instead of an edge list");

  // iterate
  auto* iterate_cmd = app.add_subcommand("iterate", "iterate the clique graph operator");
  std::string iterate_file;
  cliquedyn::Budget budget;
  bool iterate_json = false, iterate_timings = false;
  iterate_cmd->add_option("file", iterate_file, "edge-list file")->required();
  iterate_cmd->add_option("--max-steps", budget.max_steps, "iteration budget");
  iterate_cmd->add_option("--max-vertices", budget.max_vertices, "clique-count budget per iterate");
  iterate_cmd->add_flag("--json", iterate_json, "emit a JSON report");
  iterate_cmd->add_flag("--timings", iterate_timings, "include wall-clock timings");

  // helly
  auto* helly = app.add_subcommand("helly", "decide the clique-Helly property");
  std::string helly_file;
  long long helly_brute_cap = -1;
  helly->add_option("file", helly_file, "edge-list file")->required();
  helly->add_option("--brute", helly_brute_cap, "use the definitional check, capped clique count");

  // stats
  auto* stats = app.add_subcommand("stats", "girth, local girth, local min degree, local cyclicity");
  std::string stats_file;
  stats->add_option("file", stats_file, "edge-list file")->required();

  // cover
  auto* cover = app.add_subcommand("cover", "triangular covering maps");
  cover->require_subcommand(1);
  auto* cv = cover->add_subcommand("verify", "check a vertex map for the covering property");
  std::string cv_source, cv_target, cv_map;
  cv->add_option("source", cv_source, "source edge-list file")->required();
  cv->add_option("target", cv_target, "target edge-list file")->required();
  cv->add_option("--map", cv_map, "vertex map file (u v per line)")->required();
  auto* cq = cover->add_subcommand("quotient", "quotient by a fixed-point-free automorphism");
  std::string cq_file, cq_perm;
  bool cq_dot = false;
  cq->add_option("source", cq_file, "edge-list file")->required();
  cq->add_option("--perm", cq_perm, "permutation file (u v per line)")->required();
  cq->add_flag("--dot", cq_dot, "emit DOT instead of an edge list");
  auto* cu = cover->add_subcommand("universal", "ball of the universal triangular cover");
  std::string cu_file, cu_base;
  int cu_radius = 0;
  bool cu_dot = false;
  cu->add_option("source", cu_file, "edge-list file")->required();
  cu->add_option("--base", cu_base, "base vertex name")->required();
  cu->add_option("--radius", cu_radius, "development radius")->required()->check(CLI::NonNegativeNumber);
  cu->add_flag("--dot", cu_dot, "emit DOT instead of an edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      std::map<std::string, std::string> params;
      for (const auto& kv : gen_params) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
          throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      emit_graph(cliquedyn::generate(gen_family, params), gen_dot);
      return 0;
    }

    if (cliques_cmd->parsed()) {
      Graph g = load_graph(cliques_file);
      for (const auto& q : cliquedyn::maximal_cliques(g)) {
        for (size_t i = 0; i < q.size(); ++i)
          std::cout << (i ? " " : "") << g.name(q[static_cast<size_t>(i)]);
        std::cout << "\n";
      }
      return 0;
    }

    if (kgraph->parsed()) {
      Graph g = load_graph(kgraph_file);
      for (int i = 0; i < kgraph_n; ++i) g = cliquedyn::clique_graph(g).graph;
      emit_graph(g, kgraph_dot);
      return 0;
    }

    if (iterate_cmd->parsed()) {
      Graph g = load_graph(iterate_file);
      auto t0 = std::chrono::steady_clock::now();
      cliquedyn::DynamicsReport rep = cliquedyn::iterate(g, budget);
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      bool converged = rep.status == cliquedyn::DynamicsStatus::Converged;
      if (iterate_json) {
        nlohmann::json doc;
        doc["parameters"] = {{"max_steps", budget.max_steps},
                             {"max_vertices", budget.max_vertices}};
        doc["period"] = rep.period;
        doc["preperiod"] = rep.preperiod;
        doc["size_sequence"] = rep.size_sequence;
        doc["status"] = converged ? "converged" : "budget-exceeded";
        if (iterate_timings) doc["timings"] = {{"total_ms", ms}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "status: " << (converged ? "converged" : "budget exceeded") << "\n";
        std::cout << "size sequence:";
        for (long long s : rep.size_sequence) std::cout << " " << s;
        std::cout << "\n";
        if (converged) {
          std::cout << "preperiod: " << rep.preperiod << "\n";
          std::cout << "period: " << rep.period << "\n";
        }
        if (iterate_timings) std::cout << "total ms: " << ms << "\n";
      }
      return converged ? 0 : 3;
    }

    if (helly->parsed()) {
      Graph g = load_graph(helly_file);
      bool ok;
      if (helly->count("--brute")) {
        try {
          ok = cliquedyn::helly_brute(g, static_cast<std::size_t>(helly_brute_cap));
        } catch (const std::invalid_argument& e) {
          std::cerr << "error: " << e.what() << "\n";
          return 3;
        }
      } else {
        ok = cliquedyn::is_clique_helly(g);
      }
      std::cout << (ok ? "clique-Helly" : "not clique-Helly") << "\n";
      return ok ? 0 : 1;
    }

    if (stats->parsed()) {
      Graph g = load_graph(stats_file);
      if (g.vertex_count() == 0) {
        std::cout << "girth: INF\nlocal girth: INF\nlocal min degree: 0\nlocally cyclic: no\n";
        return 0;
      }
      std::cout << "girth: " << cliquedyn::girth(g).str() << "\n";
      std::cout << "local girth: " << cliquedyn::local_girth(g).str() << "\n";
      std::cout << "local min degree: " << cliquedyn::local_min_degree(g) << "\n";
      std::cout << "locally cyclic: " << (cliquedyn::is_locally_cyclic(g) ? "yes" : "no") << "\n";
      return 0;
    }

    if (cv->parsed()) {
      Graph src = load_graph(cv_source);
      Graph tgt = load_graph(cv_target);
      cliquedyn::GraphHom hom =
          cliquedyn::make_hom(std::move(src), std::move(tgt), cliquedyn::parse_pair_lines(slurp(cv_map)));
      cliquedyn::CoverReport rep = cliquedyn::is_triangular_cover(hom);
      if (rep.is_triangular_cover) {
        std::cout << "triangular cover, min fiber distance "
                  << (rep.min_fiber_distance ? std::to_string(*rep.min_fiber_distance)
                                             : std::string("infinity"))
                  << "\n";
        return 0;
      }
      std::cout << "not a triangular cover";
      if (!rep.is_hom)
        std::cout << " (not a graph homomorphism)";
      else if (rep.failing_vertex)
        std::cout << " (local isomorphism fails at '" << *rep.failing_vertex << "')";
      std::cout << "\n";
      return 1;
    }

    if (cq->parsed()) {
      Graph g = load_graph(cq_file);
      cliquedyn::QuotientResult res =
          cliquedyn::quotient_by_names(g, cliquedyn::parse_pair_lines(slurp(cq_perm)));
      emit_graph(res.graph, cq_dot);
      bool ok = res.report.is_triangular_cover;
      std::cerr << (ok ? "quotient is a triangular cover" : "quotient is not a triangular cover")
                << "\n";
      return ok ? 0 : 1;
    }

    if (cu->parsed()) {
      Graph g = load_graph(cu_file);
      cliquedyn::UniversalBall ball =
          cliquedyn::universal_cover_ball(g, g.require_index(cu_base), cu_radius);
      emit_graph(ball.cover, cu_dot);
      std::cerr << "cover ball: " << ball.cover.vertex_count() << " vertices, "
                << ball.boundary.size() << " boundary\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
