// serial reference vs OpenMP kernels on triangulation balls and random graphs
#include <benchmark/benchmark.h>

#include <random>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/generators.hpp"
#include "cliquedyn/graph.hpp"
#include "cliquedyn/serial_ref.hpp"

namespace {

using cliquedyn::Graph;

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices;
  auto name = [&](int v) {
    std::string s = std::to_string(v);
    return "v" + std::string(3 - s.size(), '0') + s;
  };
  for (int v = 0; v < n; ++v) vertices.push_back(name(v));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(name(u), name(v));
  return Graph::from_edges(vertices, edges);
}

Graph tri_ball(int r) { return cliquedyn::triangulation(6, r).graph; }

}  // namespace

static void BM_cliques_serial_tri(benchmark::State& state) {
  Graph g = tri_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::serial::maximal_cliques(g));
}
BENCHMARK(BM_cliques_serial_tri)->Arg(8)->Arg(16);

static void BM_cliques_parallel_tri(benchmark::State& state) {
  Graph g = tri_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::maximal_cliques(g));
}
BENCHMARK(BM_cliques_parallel_tri)->Arg(8)->Arg(16);

static void BM_cliques_serial_random(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::serial::maximal_cliques(g));
}
BENCHMARK(BM_cliques_serial_random)->Arg(60)->Arg(90);

static void BM_cliques_parallel_random(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::maximal_cliques(g));
}
BENCHMARK(BM_cliques_parallel_random)->Arg(60)->Arg(90);

static void BM_local_girth_serial(benchmark::State& state) {
  Graph g = tri_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::serial::local_girth(g));
}
BENCHMARK(BM_local_girth_serial)->Arg(16)->Arg(24);

static void BM_local_girth_parallel(benchmark::State& state) {
  Graph g = tri_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::local_girth(g));
}
BENCHMARK(BM_local_girth_parallel)->Arg(16)->Arg(24);

static void BM_helly_serial(benchmark::State& state) {
  Graph g = tri_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::serial::is_clique_helly(g));
}
BENCHMARK(BM_helly_serial)->Arg(10)->Arg(14);

static void BM_helly_parallel(benchmark::State& state) {
  Graph g = tri_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cliquedyn::is_clique_helly(g));
}
BENCHMARK(BM_helly_parallel)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
