#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cliquedyn/io.hpp"
#include "cliquedyn/iso.hpp"
#include "test_util.hpp"

using namespace cliquedyn;
using namespace testutil;

namespace {

// scratch directory for edge-list and map files fed to the binary
class Scratch {
 public:
  Scratch() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "cliquedyn-cli-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
    dir_ = buf.data();
  }
  ~Scratch() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string file(const std::string& name, const std::string& content) {
    auto p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    out.close();
    return p.string();
  }

 private:
  std::filesystem::path dir_;
};

Scratch& scratch() {
  static Scratch s;
  return s;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + CLIQUEDYN_CLI_PATH + "\" " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string mod_map(int n, int m) {
  std::string s;
  for (int i = 0; i < n; ++i) s += padname("c", i) + " " + padname("c", i % m) + "\n";
  return s;
}

std::string rot_map(int n, int d) {
  std::string s;
  for (int i = 0; i < n; ++i) s += padname("c", i) + " " + padname("c", (i + d) % n) + "\n";
  return s;
}

}  // namespace

TEST_CASE("iterate reports convergence as JSON") {
  std::string p4 = scratch().file("p4.txt", "a b\nb c\nc d\n");
  RunResult r = run_cli("iterate " + p4 + " --max-steps 10 --max-vertices 100 --json");
  CHECK(r.status == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["preperiod"] == 3);
  CHECK(doc["period"] == 1);
  CHECK(doc["status"] == "converged");
  CHECK(doc["size_sequence"] == nlohmann::json({4, 3, 2, 1, 1}));
  CHECK(doc["parameters"]["max_steps"] == 10);
  CHECK(doc["parameters"]["max_vertices"] == 100);
  CHECK_FALSE(doc.contains("timings"));

  // identical bytes on a rerun: the report is deterministic
  RunResult r2 = run_cli("iterate " + p4 + " --max-steps 10 --max-vertices 100 --json");
  CHECK(r2.out == r.out);

  RunResult rt = run_cli("iterate " + p4 + " --json --timings");
  CHECK(nlohmann::json::parse(rt.out)["timings"].contains("total_ms"));
}

TEST_CASE("iterate text output") {
  std::string p4 = scratch().file("p4.txt", "a b\nb c\nc d\n");
  RunResult r = run_cli("iterate " + p4);
  CHECK(r.status == 0);
  CHECK(r.out == "status: converged\nsize sequence: 4 3 2 1 1\npreperiod: 3\nperiod: 1\n");
}

TEST_CASE("iterate signals an exceeded budget") {
  std::string octa = scratch().file("octa.txt", serialize_edge_list(octahedron()));
  RunResult r = run_cli("iterate " + octa + " --max-vertices 1000");
  CHECK(r.status == 3);
  CHECK(r.out == "status: budget exceeded\nsize sequence: 6 8 16 256\n");
}

TEST_CASE("helly verdicts and exit codes") {
  std::string octa = scratch().file("octa.txt", serialize_edge_list(octahedron()));
  std::string k5 = scratch().file("k5.txt", serialize_edge_list(complete(5)));
  RunResult bad = run_cli("helly " + octa);
  CHECK(bad.status == 1);
  CHECK(bad.out == "not clique-Helly\n");
  RunResult good = run_cli("helly " + k5);
  CHECK(good.status == 0);
  CHECK(good.out == "clique-Helly\n");
  // definitional check: agrees under a sufficient cap, refuses beyond it
  CHECK(run_cli("helly " + octa + " --brute 20").status == 1);
  RunResult capped = run_cli("helly " + octa + " --brute 4", true);
  CHECK(capped.status == 3);
  CHECK(capped.out.find("error:") != std::string::npos);
}

TEST_CASE("stats lines are pinned") {
  std::string octa = scratch().file("octa.txt", serialize_edge_list(octahedron()));
  RunResult r = run_cli("stats " + octa);
  CHECK(r.status == 0);
  CHECK(r.out == "girth: 3\nlocal girth: 4\nlocal min degree: 2\nlocally cyclic: yes\n");
  std::string p4 = scratch().file("p4.txt", "a b\nb c\nc d\n");
  RunResult p = run_cli("stats " + p4);
  CHECK(p.out == "girth: INF\nlocal girth: INF\nlocal min degree: 0\nlocally cyclic: no\n");
}

TEST_CASE("cover verify") {
  std::string c8 = scratch().file("c8.txt", serialize_edge_list(cycle(8)));
  std::string c6 = scratch().file("c6.txt", serialize_edge_list(cycle(6)));
  std::string c4 = scratch().file("c4.txt", serialize_edge_list(cycle(4)));
  std::string c3 = scratch().file("c3.txt", serialize_edge_list(cycle(3)));
  std::string mod4 = scratch().file("mod4.map", mod_map(8, 4));
  std::string mod3 = scratch().file("mod3.map", mod_map(6, 3));

  RunResult ok = run_cli("cover verify " + c8 + " " + c4 + " --map " + mod4);
  CHECK(ok.status == 0);
  CHECK(ok.out == "triangular cover, min fiber distance 4\n");

  RunResult close = run_cli("cover verify " + c6 + " " + c3 + " --map " + mod3);
  CHECK(close.status == 1);
  CHECK(close.out.find("not a triangular cover (local isomorphism fails at '") == 0);

  std::string squash = scratch().file("squash.map", [&] {
    std::string s;
    for (int i = 0; i < 8; ++i) s += padname("c", i) + " c000\n";
    return s;
  }());
  RunResult broken = run_cli("cover verify " + c8 + " " + c4 + " --map " + squash);
  CHECK(broken.status == 1);
  CHECK(broken.out == "not a triangular cover (not a graph homomorphism)\n");
}

TEST_CASE("cover quotient") {
  std::string c8 = scratch().file("c8.txt", serialize_edge_list(cycle(8)));
  std::string rot4 = scratch().file("rot4.map", rot_map(8, 4));
  RunResult r = run_cli("cover quotient " + c8 + " --perm " + rot4);
  CHECK(r.status == 0);
  CHECK(are_isomorphic(parse_edge_list(r.out), cycle(4)));

  std::string c6 = scratch().file("c6.txt", serialize_edge_list(cycle(6)));
  std::string rot3 = scratch().file("rot3.map", rot_map(6, 3));
  RunResult bad = run_cli("cover quotient " + c6 + " --perm " + rot3);
  CHECK(bad.status == 1);
  CHECK(are_isomorphic(parse_edge_list(bad.out), cycle(3)));
}

TEST_CASE("cover universal") {
  std::string c4 = scratch().file("c4.txt", serialize_edge_list(cycle(4)));
  RunResult r = run_cli("cover universal " + c4 + " --base c000 --radius 2");
  CHECK(r.status == 0);
  CHECK(are_isomorphic(parse_edge_list(r.out), path(5)));
  RunResult merged = run_cli("cover universal " + c4 + " --base c000 --radius 2", true);
  CHECK(merged.out.find("cover ball: 5 vertices, 2 boundary") != std::string::npos);
}

TEST_CASE("kgraph iterates the operator") {
  std::string octa = scratch().file("octa.txt", serialize_edge_list(octahedron()));
  RunResult two = run_cli("kgraph " + octa + " -n 2");
  CHECK(two.status == 0);
  RunResult one = run_cli("kgraph " + octa + " -n 1");
  std::string mid = scratch().file("mid.txt", one.out);
  RunResult again = run_cli("kgraph " + mid + " -n 1");
  CHECK(parse_edge_list(two.out) == parse_edge_list(again.out));
  CHECK(parse_edge_list(two.out).vertex_count() == 16);

  std::string k5 = scratch().file("k5.txt", serialize_edge_list(complete(5)));
  CHECK(run_cli("kgraph " + k5).out == "c0\n");

  std::string k3 = scratch().file("k3.txt", "a b\na c\nb c\n");
  RunResult dot = run_cli("kgraph " + k3 + " -n 0 --dot");
  CHECK(dot.out == "graph G {\n  a -- b;\n  a -- c;\n  b -- c;\n}\n");
}

TEST_CASE("cliques lists one clique per line") {
  std::string k3 = scratch().file("k3.txt", "a b\na c\nb c\n");
  CHECK(run_cli("cliques " + k3).out == "a b c\n");
  std::string octa = scratch().file("octa.txt", serialize_edge_list(octahedron()));
  RunResult r = run_cli("cliques " + octa);
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 8);
}

TEST_CASE("gen emits families") {
  RunResult p = run_cli("gen --family path --param n=4");
  CHECK(p.status == 0);
  CHECK(are_isomorphic(parse_edge_list(p.out), path(4)));

  RunResult dot = run_cli("gen --family path --param n=3 --dot");
  CHECK(dot.out == "graph G {\n  p0 -- p1;\n  p1 -- p2;\n}\n");

  RunResult tree = run_cli("gen --family tree_T --param L=4 --param b=1");
  CHECK(parse_edge_list(tree.out).vertex_count() == 588);

  CHECK(run_cli("gen --family nope").status == 2);
  CHECK(run_cli("gen --family path --param n=bad").status == 2);
  CHECK(run_cli("gen --family path --param nonsense").status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").status == 2);                    // a subcommand is required
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("iterate").status == 2);             // missing file argument
  CHECK(run_cli("iterate /no/such/file").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("kgraph x.txt -n -3").status == 2);  // negative count rejected
}
