#include "doctest.h"

#include <random>
#include <set>

#include "chroma/canonical.hpp"
#include "helpers.hpp"

using namespace chroma;
using testutil::complete;
using testutil::path_graph;
using testutil::random_graph;

TEST_CASE("isomorphic relabelings collapse, different graphs do not") {
  Graph t1 = complete(3);
  Graph t2(3);
  t2.add_edge(2, 1);
  t2.add_edge(1, 0);
  t2.add_edge(0, 2);
  CHECK(canonical_form(t1) == canonical_form(t2));

  Graph p1 = path_graph(3);       // a-b-c
  Graph p2(3);                    // b-a-c: 1-0, 0-2
  p2.add_edge(1, 0);
  p2.add_edge(0, 2);
  CHECK(canonical_form(p1) == canonical_form(p2));
  CHECK(canonical_form(p1) != canonical_form(t1));
}

TEST_CASE("canonical form is permutation invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> nd(1, 8);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, n * (n - 1) / 2);
    Graph g = random_graph(n, md(rng), rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g).bytes == canonical_form(relabel(g, perm)).bytes);
  }
}

TEST_CASE("canonical classes of all labeled graphs match known counts") {
  // independent of the generator used elsewhere: hash every labeled graph
  const int counts[] = {1, 1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
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
    CHECK((int)classes.size() == counts[n]);
  }
}

TEST_CASE("canonical graph is a representative of its own class") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nd(1, 8);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, n * (n - 1) / 2);
    Graph g = random_graph(n, md(rng), rng);
    Graph cg = canonical_graph(g);
    CHECK(canonical_form(cg) == canonical_form(g));
    CHECK(cg.edge_count() == g.edge_count());
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(canonical_form(Graph(11)), SizeError);
  CHECK(canonical_form(Graph(0)).bytes == "?");
}
