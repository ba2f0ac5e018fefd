#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "chroma/graph.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;
using namespace chroma;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("chroma_cli_test_" + std::to_string(getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

RunResult run_cli(const std::string& args) {
  fs::path out_file = scratch_dir() / "out.txt";
  std::string cmd = std::string(CHROMA_CLI_PATH) + " " + args + " >" + out_file.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("cli check: avoid, witness, improper, malformed") {
  fs::path dir = scratch_dir();
  write_file(dir / "c6.g6", emit_graph6(testutil::cycle(6)) + "\n");
  write_file(dir / "c6.colors", "0 1 2 0 1 2\n");
  write_file(dir / "k6.g6", emit_graph6(testutil::complete(6)) + "\n");
  write_file(dir / "k6.colors", "0 1 2 3 4 5\n");
  write_file(dir / "k3.g6", emit_graph6(testutil::complete(3)) + "\n");
  write_file(dir / "k3.colors", "0 0 1\n");
  write_file(dir / "bad.g6", "Bww\n");

  RunResult avoid = run_cli("check --graph " + (dir / "c6.g6").string() + " --coloring " +
                            (dir / "c6.colors").string() + " -l 3");
  CHECK(avoid.exit_code == 0);
  CHECK(avoid.out.find("avoids") != std::string::npos);

  RunResult found = run_cli("check --graph " + (dir / "k6.g6").string() + " --coloring " +
                            (dir / "k6.colors").string() + " -l 5");
  CHECK(found.exit_code == 1);
  CHECK(found.out.find("bichromatic P_5") != std::string::npos);

  RunResult improper = run_cli("check --graph " + (dir / "k3.g6").string() + " --coloring " +
                               (dir / "k3.colors").string() + " -l 3");
  CHECK(improper.exit_code == 2);

  RunResult malformed = run_cli("check --graph " + (dir / "bad.g6").string() + " --coloring " +
                                (dir / "k3.colors").string() + " -l 3");
  CHECK(malformed.exit_code == 2);
}

TEST_CASE("cli feasible and witness emit valid JSON") {
  fs::path dir = scratch_dir();
  write_file(dir / "k4.g6", emit_graph6(testutil::complete(4)) + "\n");
  write_file(dir / "p3.tree", "3\n0 1\n1 2\n2 3\n");
  RunResult infeas = run_cli("feasible --graph " + (dir / "k4.g6").string() + " --tree " +
                             (dir / "p3.tree").string() + " --json");
  CHECK(infeas.exit_code == 1);
  auto j = nlohmann::json::parse(infeas.out);
  CHECK(j["feasible"] == false);
  CHECK(j.contains("chain"));

  write_file(dir / "k7.g6", emit_graph6(testutil::complete(7)) + "\n");
  write_file(dir / "k7.colors", "0 1 2 3 4 5 6\n");
  RunResult wit = run_cli("witness --graph " + (dir / "k7.g6").string() + " --coloring " +
                          (dir / "k7.colors").string() + " -k 2 --json");
  CHECK(wit.exit_code == 0);
  auto wj = nlohmann::json::parse(wit.out);
  CHECK(wj["witness"].size() == 6);
  CHECK(wj["trace"]["levels"].size() >= 1);
}

TEST_CASE("cli enumerate JSON and determinism") {
  fs::path dir = scratch_dir();
  write_file(dir / "p3.tree", "3\n0 1\n1 2\n2 3\n");
  std::string args = "enumerate -n 5 --tree " + (dir / "p3.tree").string() + " --json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["value"] == 4);
  CHECK(j["n"] == 5);
}

TEST_CASE("cli construct writes both files") {
  fs::path dir = scratch_dir();
  std::string prefix = (dir / "fam").string();
  RunResult r = run_cli("construct disjoint-cliques -n 6 -r 3 --out " + prefix);
  CHECK(r.exit_code == 0);
  std::ifstream g6(prefix + ".g6");
  std::string line;
  REQUIRE(std::getline(g6, line));
  Graph g = parse_graph6(line);
  CHECK(g.n == 6);
  CHECK(g.edge_count() == 6);
  std::ifstream colors(prefix + ".colors");
  REQUIRE(std::getline(colors, line));
  CHECK(parse_coloring(line, 6) == Coloring{0, 1, 2, 0, 1, 2});

  RunResult bad = run_cli("construct disjoint-cliques -n 7 -r 3");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli double-star and embed-tree") {
  fs::path dir = scratch_dir();
  write_file(dir / "k6.g6", emit_graph6(testutil::complete(6)) + "\n");
  write_file(dir / "k6.colors", "0 1 2 3 4 5\n");
  RunResult ds = run_cli("double-star --graph " + (dir / "k6.g6").string() + " --coloring " +
                         (dir / "k6.colors").string() + " -a 2 -b 2");
  CHECK(ds.exit_code == 0);
  CHECK(ds.out.find("S_{2,2}") != std::string::npos);

  write_file(dir / "s12.tree", "4\n0 1\n0 2\n1 3\n1 4\n");
  write_file(dir / "k8.g6", emit_graph6(testutil::complete(8)) + "\n");
  write_file(dir / "k8.colors", "0 1 2 3 4 5 6 7\n");
  RunResult em = run_cli("embed-tree --graph " + (dir / "k8.g6").string() + " --coloring " +
                         (dir / "k8.colors").string() + " --tree " + (dir / "s12.tree").string());
  CHECK(em.exit_code == 0);
  CHECK(em.out.find("embedding of S_{1,2}") != std::string::npos);
}

TEST_CASE("cli enumerate over a corpus file") {
  fs::path dir = scratch_dir();
  write_file(dir / "corpus.g6", emit_graph6(testutil::cycle(6)) + "\n" +
                                    emit_graph6(testutil::complete(6)) + "\n");
  write_file(dir / "p3.tree", "3\n0 1\n1 2\n2 3\n");
  RunResult r = run_cli("enumerate --corpus " + (dir / "corpus.g6").string() + " --tree " +
                        (dir / "p3.tree").string() + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 6);
  CHECK(j["extremal"].size() == 1);
}

TEST_CASE("cli edge-list graphs are accepted") {
  fs::path dir = scratch_dir();
  write_file(dir / "c6.edges", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  write_file(dir / "c6.colors", "0 1 2 0 1 2\n");
  RunResult r = run_cli("check --graph " + (dir / "c6.edges").string() + " --coloring " +
                        (dir / "c6.colors").string() + " -l 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("avoids") != std::string::npos);
}
