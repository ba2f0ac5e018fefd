#include "doctest.h"

#include <set>

#include "chroma/extremal.hpp"
#include "chroma/feasibility.hpp"
#include "helpers.hpp"

using namespace chroma;
using testutil::complete;
using testutil::cycle;

namespace {

std::string canon6(const Graph& g) { return canonical_form(g).bytes; }

bool contains(const std::vector<std::string>& haystack, const std::string& needle) {
  return std::find(haystack.begin(), haystack.end(), needle) != haystack.end();
}

}  // namespace

TEST_CASE("enumeration counts match the labeled-filter oracle") {
  const size_t counts[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_nonisomorphic(n).size() == counts[n]);
  // independent oracle: canonical classes over every labeled graph, n <= 6
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> classes;
    int pairs = n * (n - 1) / 2;
    for (Mask edges = 0; edges < bit(pairs); ++edges) {
      Graph g(n);
      int b = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
          if (edges & bit(b)) g.add_edge(i, j);
      classes.insert(canonical_form(g).bytes);
    }
    CHECK(classes.size() == enumerate_nonisomorphic(n).size());
  }
  // representatives are canonical and pairwise distinct
  for (int n = 4; n <= 6; ++n) {
    std::set<std::string> seen;
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      CHECK(emit_graph6(g) == canon6(g));
      CHECK(seen.insert(emit_graph6(g)).second);
    }
  }
}

TEST_CASE("compute_ex_c fixed values for P_3") {
  TreePattern p3 = path_pattern(3);
  CHECK(compute_ex_c(3, p3).value == 3);
  CHECK(compute_ex_c(5, p3).value == 4);
  ExtremalReport r6 = compute_ex_c(6, p3);
  CHECK(r6.value == 6);
  CHECK(contains(r6.extremal_graph6, canon6(construct(DisjointCliques{6, 3}).graph)));
  CHECK(contains(r6.extremal_graph6, canon6(cycle(6))));
  CHECK(r6.extremal_graph6.size() == 2);
}

TEST_CASE("compute_ex_c report re-verifies") {
  TreePattern p3 = path_pattern(3);
  ExtremalReport r = compute_ex_c(5, p3);
  for (const std::string& s : r.extremal_graph6) {
    Graph g = parse_graph6(s);
    CHECK(g.edge_count() == r.value);
    CHECK(decide_feasible(g, p3).feasible);
  }
}

TEST_CASE("check_path_theorem at (5,2) and the (6,1) anomaly") {
  {
    ExtremalReport r = check_path_theorem(5, 2);
    CHECK(r.value == 10);
    CHECK(r.extremal_graph6 == std::vector<std::string>{canon6(complete(5))});
    REQUIRE(r.bounds.size() == 1);
    CHECK(r.bounds[0].met);
    CHECK(r.bounds[0].characterization_match);
  }
  {
    ExtremalReport r = check_path_theorem(6, 1);
    CHECK(r.value == 6);
    REQUIRE(r.bounds.size() == 1);
    CHECK(r.bounds[0].met);
    CHECK(!r.bounds[0].characterization_match);  // C_6 joins 2*K_3
    CHECK(r.extremal_graph6.size() == 2);
  }
  CHECK_THROWS_AS(check_path_theorem(5, 0), std::invalid_argument);
}

TEST_CASE("colored path bound holds across the small range") {
  for (int k = 1; k <= 2; ++k)
    for (int n = 3; n <= 7; ++n) {
      if (2 * k + 1 > n + 1) continue;
      CHECK(compute_ex_c(n, path_pattern(2 * k + 1)).value <= k * n);
    }
}

TEST_CASE("classical extremal values") {
  {
    ExtremalReport r = compute_ex_classic(6, PathLen{3});
    CHECK(r.value == 6);
    CHECK(r.extremal_graph6 ==
          std::vector<std::string>{canon6(construct(DisjointCliques{6, 3}).graph)});
    CHECK(r.bounds[0].met);
    CHECK(r.bounds[0].characterization_match);
  }
  {
    ExtremalReport r = compute_ex_classic(5, AllCyclesFrom{3});  // forests
    CHECK(r.value == 4);
    CHECK(r.bounds[0].met);
  }
  {
    ExtremalReport r = compute_ex_classic(7, AllCyclesFrom{4});
    CHECK(r.value == 9);
    CHECK(contains(r.extremal_graph6, canon6(construct(SharedVertexCliques{7, 4}).graph)));
    // triangles can also chain; the bound is met but the family is not unique
    CHECK(r.bounds[0].met);
    CHECK(r.extremal_graph6.size() == 2);
    CHECK(!r.bounds[0].characterization_match);
  }
  {
    ExtremalReport r = compute_ex_classic(6, PathLen{4});
    CHECK(2 * r.value < 3 * 6);  // strictly below when ell does not divide n
  }
}

TEST_CASE("constructions are proper and leaf-monochromatic for their pattern") {
  {
    ColoredGraph cg = construct(DisjointCliques{6, 3});
    CHECK(cg.graph.edge_count() == 6);
    TreePattern p3 = path_pattern(3);
    for (Mask ls : leaf_image_sets(cg.graph, p3)) {
      int c0 = cg.coloring[lowest_bit(ls)];
      for (int v : bits(ls)) CHECK(cg.coloring[v] == c0);
    }
  }
  {
    ColoredGraph cg = construct(BalancedBipartite{5});
    CHECK(cg.graph.edge_count() == 6);  // floor(25/4)
    CHECK(canon6(cg.graph) == canon6(cg.graph));
    for (const TreePattern& t : {path_pattern(2), path_pattern(4)})
      for (Mask ls : leaf_image_sets(cg.graph, t)) {
        int c0 = cg.coloring[lowest_bit(ls)];
        for (int v : bits(ls)) CHECK(cg.coloring[v] == c0);
      }
  }
  {
    ColoredGraph cg = construct(SharedVertexCliques{7, 4});
    CHECK(cg.graph.edge_count() == 9);
    CHECK(!smallest_long_cycle(cg.graph, 4).has_value());
  }
  {
    ColoredGraph cg = construct(ModColoredCycle{6, 3});
    CHECK(cg.coloring == Coloring{0, 1, 2, 0, 1, 2});
    CHECK(!find_bichromatic_path(cg, 3).has_value());
  }
  CHECK_THROWS_AS(construct(DisjointCliques{7, 3}), std::invalid_argument);
  CHECK_THROWS_AS(construct(SharedVertexCliques{8, 4}), std::invalid_argument);
  CHECK_THROWS_AS(construct(ModColoredCycle{7, 3}), std::invalid_argument);
}

TEST_CASE("tree generation counts") {
  CHECK(all_trees_with_edges(1).size() == 1);
  CHECK(all_trees_with_edges(2).size() == 1);
  CHECK(all_trees_with_edges(3).size() == 2);
  CHECK(all_trees_with_edges(4).size() == 3);
  CHECK(all_trees_with_edges(5).size() == 6);
  for (const TreePattern& t : all_trees_with_edges(4)) CHECK(t.k == 4);
}

TEST_CASE("conjecture scan has no violations at small sizes") {
  auto rows = conjecture_scan(3, 6);
  CHECK(!rows.empty());
  long exc = 0;
  for (const auto& r : rows) {
    CHECK(!r.violation);
    if (r.kind == "ex^c") ++exc;
  }
  CHECK(exc > 0);
  // spot value: ex^c(6, P_3) = 6 <= (3-1)*6/2 = 6
  bool found = false;
  for (const auto& r : rows)
    if (r.kind == "ex^c" && r.tree == "P_3" && r.n == 6) {
      found = true;
      CHECK(r.value == 6);
      CHECK(r.bound == doctest::Approx(6.0));
    }
  CHECK(found);
}

TEST_CASE("corpus scan") {
  std::string corpus = emit_graph6(cycle(6)) + "\n" +
                       emit_graph6(construct(DisjointCliques{6, 3}).graph) + "\n\n" +
                       emit_graph6(complete(6)) + "\n";
  std::vector<Graph> graphs = parse_graph6_lines(corpus);
  REQUIRE(graphs.size() == 3);
  ExtremalReport r = compute_ex_c_over(graphs, path_pattern(3));
  CHECK(r.value == 6);  // K_6 is infeasible; both 6-edge graphs win
  CHECK(r.extremal_graph6.size() == 2);
  CHECK_THROWS_AS(compute_ex_c_over({}, path_pattern(3)), std::invalid_argument);
  CHECK_THROWS_AS(compute_ex_c_over({cycle(5), cycle(6)}, path_pattern(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6_lines("Bw\nBww\n"), ParseError);
}

TEST_CASE("workers do not change results") {
  TreePattern p3 = path_pattern(3);
  ExtremalReport a = compute_ex_c(6, p3, 1);
  ExtremalReport b = compute_ex_c(6, p3, 4);
  CHECK(a.value == b.value);
  CHECK(a.extremal_graph6 == b.extremal_graph6);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("report JSON shape") {
  auto j = report_to_json(check_path_theorem(5, 2));
  CHECK(j["n"] == 5);
  CHECK(j["value"] == 10);
  CHECK(j["extremal"].size() == 1);
  CHECK(j["bounds"].size() == 1);
  CHECK(j["bounds"][0].contains("characterization_match"));
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(enumerate_nonisomorphic(9), SizeError);
  CHECK_THROWS_AS(conjecture_scan(6, 6), SizeError);
  CHECK_THROWS_AS(conjecture_scan(3, 9), SizeError);
}
