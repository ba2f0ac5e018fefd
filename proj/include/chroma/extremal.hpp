#pragma once

// Exhaustive extremal computations over all non-isomorphic small graphs:
// the colored extremal function ex^c, the classical path/cycle bounds, the
// extremal family constructions, and an empirical scan of the tree
// conjectures.

#include <string>
#include <vector>

#include "json.hpp"

#include "chroma/canonical.hpp"
#include "chroma/graph.hpp"
#include "chroma/pattern.hpp"

namespace chroma {

// One representative per isomorphism class, deterministic order.  n <= 8;
// results are cached per n for the lifetime of the process.
const std::vector<Graph>& enumerate_nonisomorphic(int n);

struct BoundComparison {
  std::string law;       // which bound this row checks
  double bound = 0;      // bound value (exact: integers and halves only)
  bool met = false;      // value == bound
  bool characterization_match = true;  // extremal set == the named family
  std::string note;
};

struct ExtremalReport {
  int n = 0;
  std::string pattern;
  int value = 0;
  std::vector<std::string> extremal_graph6;
  std::vector<BoundComparison> bounds;
  long scanned = 0;
  long feasible_count = 0;
};

nlohmann::ordered_json report_to_json(const ExtremalReport& r);

// Max edges over n-vertex graphs admitting a leaf-monochromatic proper
// coloring for t, with all extremal graphs in canonical graph6 form.
ExtremalReport compute_ex_c(int n, const TreePattern& t, int workers = 1);
// Same scan over an explicit corpus (e.g. a newline-separated graph6 file)
// instead of the full isomorph-free catalogue.  All graphs must share n.
ExtremalReport compute_ex_c_over(const std::vector<Graph>& corpus, const TreePattern& t,
                                 int workers = 1);

// compute_ex_c for P_{2k+1} plus the kn bound and disjoint-clique family
// checks.  Mismatches are reported in the bounds rows, never suppressed.
ExtremalReport check_path_theorem(int n, int k, int workers = 1);

struct PathLen {
  int ell;
};
struct AllCyclesFrom {
  int ell;
};
// Classical extremal numbers by exhaustive scan: no path of ell edges
// (PathLen) or no cycle of length >= ell (AllCyclesFrom), with the
// (ell-1)n/2 resp. (ell-1)(n-1)/2 bound rows.
ExtremalReport compute_ex_classic(int n, PathLen forbidden, int workers = 1);
ExtremalReport compute_ex_classic(int n, AllCyclesFrom forbidden, int workers = 1);
// Plain extremal number ex(n, t) over subgraph containment.
ExtremalReport compute_ex_plain(int n, const TreePattern& t, int workers = 1);

// Extremal family constructions, properly colored.
struct DisjointCliques {
  int n, r;  // r | n
};
struct BalancedBipartite {
  int n;
};
struct SharedVertexCliques {
  int n, ell;  // (ell-2) | (n-1)
};
struct ModColoredCycle {
  int n, p;  // p | n, p >= 2
};
ColoredGraph construct(const DisjointCliques& s);
ColoredGraph construct(const BalancedBipartite& s);
ColoredGraph construct(const SharedVertexCliques& s);
ColoredGraph construct(const ModColoredCycle& s);

// All non-isomorphic trees with exactly k edges, deterministic order.
std::vector<TreePattern> all_trees_with_edges(int k);

struct ConjectureRow {
  std::string tree;
  int k = 0;
  int n = 0;
  std::string kind;  // "ex" or "ex^c"
  int value = 0;
  double bound = 0;  // (k-1)*n/2
  bool violation = false;
};
// ex and (for MixedSides trees) ex^c for every tree with <= max_edges edges
// and every n <= max_n, against the (k-1)n/2 conjectured bound.
std::vector<ConjectureRow> conjecture_scan(int max_edges, int max_n, int workers = 1);
nlohmann::ordered_json conjecture_rows_to_json(const std::vector<ConjectureRow>& rows);

}  // namespace chroma
