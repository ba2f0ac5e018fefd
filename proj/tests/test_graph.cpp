#include "doctest.h"

#include <random>

#include "chroma/graph.hpp"
#include "helpers.hpp"

using namespace chroma;
using testutil::complete;
using testutil::cycle;
using testutil::path_graph;
using testutil::random_graph;

namespace {

// Independent graph6 encoder, straight from the format definition: upper
// triangle column-major, 6 bits per byte high-first, zero padding, +63.
std::string g6_oracle(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  std::string out(1, char(63 + g.n));
  for (size_t p = 0; p < bits.size(); p += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = v * 2 + (bits[p + t] - '0');
    out += char(63 + v);
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 fixed values against the hand encoder") {
  CHECK(g6_oracle(complete(3)) == "Bw");
  CHECK(g6_oracle(complete(5)) == "D~{");
  CHECK(emit_graph6(complete(3)) == "Bw");
  CHECK(emit_graph6(complete(5)) == "D~{");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(Graph(0)) == "?");

  Graph two = parse_graph6("A?");
  CHECK(two.n == 2);
  CHECK(two.edge_count() == 0);
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6("D~{") == complete(5));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> nd(0, 10);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, n * (n - 1) / 2);
    Graph g = random_graph(n, md(rng), rng);
    CHECK(emit_graph6(g) == g6_oracle(g));
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("graph6 parse errors name the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("\x20"), ParseError);     // below 63
  CHECK_THROWS_AS(parse_graph6("~??"), ParseError);      // multi-byte order
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);        // truncated
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);      // trailing garbage
  CHECK_THROWS_AS(parse_graph6("Bw "), ParseError);      // whitespace is garbage
  CHECK_THROWS_AS(parse_graph6("a?"), ParseError);       // n = 34 > 16
  CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError);    // bad data byte
  CHECK(parse_graph6("A_").edge_count() == 1);           // K_2: only the data bit set
  CHECK_THROWS_AS(parse_graph6("AO"), ParseError);       // nonzero padding bit (n=2)
  try {
    parse_graph6("Bww");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("edge list format") {
  Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("4 2\n0 1\n"), std::invalid_argument);       // short
  CHECK_THROWS_AS(parse_edge_list("4 1\n0 1\n2 3\n"), std::invalid_argument);  // trailing
  CHECK_THROWS_AS(parse_edge_list("4 1\n0 0\n"), std::invalid_argument);       // loop
  CHECK_THROWS_AS(parse_edge_list("4 2\n0 1\n1 0\n"), std::invalid_argument);  // dup
  CHECK_THROWS_AS(parse_edge_list("4 1\n0 9\n"), std::invalid_argument);       // range
  CHECK_THROWS_AS(parse_edge_list("99 0\n"), SizeError);
}

TEST_CASE("coloring parsing and properness") {
  Coloring c = parse_coloring("0 1 2\n", 3);
  CHECK(c == Coloring{0, 1, 2});
  CHECK_THROWS_AS(parse_coloring("0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring("0 1 2 3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring("0 -1 2", 3), std::invalid_argument);

  CHECK(is_proper(complete(3), {0, 1, 2}));
  CHECK(!is_proper(complete(3), {0, 0, 1}));
  CHECK(is_proper(cycle(6), {0, 1, 2, 0, 1, 2}));
  CHECK(first_improper_edge(complete(3), {0, 0, 1}) == std::pair<int, int>{0, 1});
  CHECK_THROWS_AS(is_proper(complete(3), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_colored_graph(complete(3), {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("greedy coloring is proper") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> nd(1, 12);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, n * (n - 1) / 2);
    Graph g = random_graph(n, md(rng), rng);
    CHECK(is_proper(g, greedy_coloring(g)));
  }
}

TEST_CASE("k_core examples") {
  {
    auto [core, trace] = k_core(path_graph(4), 2);
    CHECK(core.n == 0);
    CHECK(trace.removed.size() == 4);
    CHECK(trace.removed[0] == std::pair<int, int>{0, 1});
  }
  {
    auto [core, trace] = k_core(complete(5), 2);
    CHECK(core == complete(5));
    CHECK(trace.removed.empty());
  }
  {
    Graph g(6);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    g.add_edge(4, 5);  // pendant
    auto [core, trace] = k_core(g, 3);
    CHECK(core == complete(5));
    CHECK(trace.removed == std::vector<std::pair<int, int>>{{5, 1}});
  }
  CHECK_THROWS_AS(k_core(complete(3), 0), std::invalid_argument);
}

TEST_CASE("k_core keeps the density surplus") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> kd(1, 3);
    int k = kd(rng);
    int n_min = k == 1 ? 4 : (k == 2 ? 6 : 8);
    std::uniform_int_distribution<int> nd(n_min, 14);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(k * n + 1, n * (n - 1) / 2);
    Graph g = random_graph(n, md(rng), rng);
    Mask core = k_core_mask(g, k, full_mask(n));
    REQUIRE(core != 0);
    CHECK(edge_count(g, core) > k * popcount(core));
    for (int v : bits(core)) CHECK(popcount(g.adj[v] & core) >= k);
  }
}

TEST_CASE("connected components") {
  {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == 0b000111);
    CHECK(comps[1] == 0b111000);
  }
  CHECK(connected_components(complete(5)).size() == 1);
  CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("some dense component keeps the surplus") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> kd(1, 3);
    int k = kd(rng);
    int n_min = k == 1 ? 4 : (k == 2 ? 6 : 8);
    std::uniform_int_distribution<int> nd(n_min, 14);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(k * n + 1, n * (n - 1) / 2);
    Graph g = random_graph(n, md(rng), rng);
    bool found = false;
    for (Mask m : connected_components(g))
      if (edge_count(g, m) > k * popcount(m)) found = true;
    CHECK(found);
  }
}

TEST_CASE("induced and compact subgraphs") {
  Graph g = complete(4);
  Graph sub = induced(g, 0b1011);
  CHECK(sub.edge_count() == 3);
  CHECK(sub.degree(2) == 0);
  std::vector<int> ids;
  Graph c = compact(g, 0b1011, &ids);
  CHECK(c == complete(3));
  CHECK(ids == std::vector<int>{0, 1, 3});
}
