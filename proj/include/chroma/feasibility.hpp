#pragma once

// Decides whether a graph admits a proper coloring under which every copy of
// a tree pattern has monochromatic leaves.  Since the number of colors is
// unrestricted, this reduces to a forced-equality closure: merge the leaf set
// of every copy; the graph is feasible exactly when no edge joins two
// vertices of the same forced class.  Certificates are produced in both
// directions and can be re-verified independently.

#include <vector>

#include "json.hpp"

#include "chroma/graph.hpp"
#include "chroma/pattern.hpp"

namespace chroma {

struct ForcedPartition {
  int n = 0;
  std::vector<Mask> leafsets;  // all leaf-image sets, ascending
  std::vector<int> parent;     // union-find, no path compression (n <= 16)

  // Provenance forest: one edge per performed union, labeled by the leaf set
  // that forced it.  Spans each class; used to reconstruct conflict chains.
  struct ForestEdge {
    int to;
    int leafset;  // index into leafsets
  };
  std::vector<std::vector<ForestEdge>> forest;

  int root(int v) const {
    while (parent[v] != v) v = parent[v];
    return v;
  }
  bool same(int u, int v) const { return root(u) == root(v); }
  // Class labels 0..C-1, classes numbered by smallest member.
  std::vector<int> class_labels() const;
  // Leaf sets along the forest path between two same-class vertices.
  std::vector<Mask> chain(int u, int v) const;
};

ForcedPartition forced_partition(const Graph& g, const TreePattern& t);

struct FeasibilityOutcome {
  bool feasible = false;
  Coloring coloring;                          // witness coloring when feasible
  std::pair<int, int> conflict_edge{-1, -1};  // edge inside a class otherwise
  std::vector<Mask> chain;                    // leaf sets linking its endpoints
};

FeasibilityOutcome decide_feasible(const Graph& g, const TreePattern& t);

// Independent oracle: enumerates proper colorings as restricted-growth
// strings and copies as plain injective maps.  n <= 7.
bool brute_force_feasible(const Graph& g, const TreePattern& t);

// Re-verifies an outcome from scratch (no trust in the producing code).
bool check_certificate(const Graph& g, const TreePattern& t, const FeasibilityOutcome& out);

nlohmann::ordered_json outcome_to_json(const FeasibilityOutcome& out);

}  // namespace chroma
