#pragma once

// Exact substructure search over small graphs: fixed-length simple paths,
// shortest long cycles, tree (subgraph) embeddings with leaf tracking, and
// double stars.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

struct PathWitness {
  std::vector<int> vertices;  // consecutive vertices adjacent, all distinct
  int length() const { return (int)vertices.size() - 1; }  // edges
};

struct CycleWitness {
  std::vector<int> vertices;  // cyclically adjacent, all distinct, >= 3
  int length() const { return (int)vertices.size(); }
};

enum class LeafProfile { AllSameSide, MixedSides };

// A tree on vertices 0..k given by its k edges, with the derived data every
// consumer needs: the leaf set, the unique 2-coloring, and whether the leaves
// straddle both sides of it.
struct TreePattern {
  int k = 0;
  std::vector<std::pair<int, int>> edges;
  Graph graph;
  Mask leaves = 0;
  Mask side = 0;  // vertices on the opposite side of vertex 0
  LeafProfile leaf_profile = LeafProfile::AllSameSide;
  std::string name;
};

TreePattern make_tree(std::vector<std::pair<int, int>> edges);
// Text format: "k" then k lines "u v"; validated for tree-ness.
TreePattern parse_tree(const std::string& text);
std::string emit_tree(const TreePattern& t);
TreePattern path_pattern(int ell);          // P_ell, ell >= 1 edges
TreePattern star_pattern(int leaves);       // K_{1,leaves}
TreePattern double_star_pattern(int a, int b);  // S_{a,b}

LeafProfile classify_tree(const TreePattern& t);
// A path between two leaves of t at odd distance (shortest one, ties by
// vertex order).  Requires MixedSides.
PathWitness odd_leaf_path(const TreePattern& t);

struct DoubleStarWitness {
  int u = -1, v = -1;          // adjacent centers
  std::vector<int> a_leaves;   // distinct neighbors of u
  std::vector<int> b_leaves;   // distinct neighbors of v
};

// All unordered pairs {u,v} joined by a simple path with exactly ell edges.
std::vector<std::pair<int, int>> all_path_endpoint_pairs(const Graph& g, int ell);

// A simple path of exactly ell edges whose endpoint colors differ.
std::optional<PathWitness> find_bichromatic_path(const ColoredGraph& cg, int ell);
std::optional<PathWitness> find_bichromatic_path(const Graph& g, const Coloring& c, int ell,
                                                 Mask active);

// Minimum-length cycle among all cycles of length >= ell_min; ties broken by
// lexicographically least vertex sequence.
std::optional<CycleWitness> smallest_long_cycle(const Graph& g, int ell_min);
std::optional<CycleWitness> smallest_long_cycle(const Graph& g, int ell_min, Mask active);

// Every embedding of t into g as a subgraph (not necessarily induced), in a
// deterministic order; fn returns false to stop.  The `induced` toggle is
// experimental and rejects embeddings whose image spans extra edges.
void for_each_embedding(const Graph& g, const TreePattern& t,
                        const std::function<bool(const std::vector<int>&)>& fn,
                        bool induced = false);
// Leaf-image vertex sets of all copies of t in g, deduplicated, ascending.
std::vector<Mask> leaf_image_sets(const Graph& g, const TreePattern& t, bool induced = false);
bool contains_tree(const Graph& g, const TreePattern& t);

// A plain (color-free) copy of S_{a,b}, or absent.
std::optional<DoubleStarWitness> find_double_star(const Graph& g, int a, int b);
std::optional<DoubleStarWitness> find_double_star(const Graph& g, int a, int b, Mask active);

// Witness validators, used by tests and by the CLI before printing.
bool validate_path(const Graph& g, const PathWitness& w, int expected_length = -1);
bool validate_cycle(const Graph& g, const CycleWitness& w, int min_length = 3);
bool validate_double_star(const Graph& g, const DoubleStarWitness& w, int a, int b);

}  // namespace chroma
