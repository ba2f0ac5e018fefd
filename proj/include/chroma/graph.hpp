#pragma once

// Small-graph core: bitmask adjacency rows, graph6 and edge-list I/O,
// proper colorings, k-cores and connected components.  Everything here
// assumes n <= 16 so that a vertex set fits in one machine word.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

using Mask = std::uint32_t;

constexpr int kMaxVertices = 16;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask bit(int v) { return Mask{1} << v; }
inline Mask full_mask(int n) { return n <= 0 ? 0 : (Mask{1} << n) - 1; }
inline int lowest_bit(Mask m) { return __builtin_ctz(m); }

// Iterates the set bits of a mask in ascending order.
struct BitRange {
  struct Iter {
    Mask rest;
    int operator*() const { return __builtin_ctz(rest); }
    Iter& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const Iter& o) const { return rest != o.rest; }
  };
  Mask m;
  Iter begin() const { return {m}; }
  Iter end() const { return {0}; }
};
inline BitRange bits(Mask m) { return {m}; }

struct ParseError : std::invalid_argument {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::invalid_argument(msg + " (byte offset " + std::to_string(off) + ")"),
        offset(off) {}
};

struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a derived fact the algorithms rely on fails at run time.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Soft size guards (enumeration, canonical forms, brute-force oracles) can be
// raised via the CHROMA_MAX_N environment variable; the n <= 16 representation
// limit is hard.
int soft_max_n(int default_limit);

struct Graph {
  int n = 0;
  std::vector<Mask> adj;  // adj[v] = neighbor set of v as a bitmask

  Graph() = default;
  explicit Graph(int n_);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  int degree(int v) const { return popcount(adj[v]); }
  int edge_count() const;

  bool operator==(const Graph&) const = default;
};

using Coloring = std::vector<int>;

struct ColoredGraph {
  Graph graph;
  Coloring coloring;
};

bool is_proper(const Graph& g, const Coloring& c);
// First edge whose endpoints share a color, or (-1,-1).
std::pair<int, int> first_improper_edge(const Graph& g, const Coloring& c);
// Validates properness; throws std::invalid_argument naming the bad edge.
ColoredGraph make_colored_graph(Graph g, Coloring c);
// First-fit coloring in ascending vertex order; always proper.
Coloring greedy_coloring(const Graph& g);

// graph6, bit-exact per the published format (no header, n <= 62 byte form).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);
// Newline-separated graph6 corpus; blank lines skipped, errors name the line.
std::vector<Graph> parse_graph6_lines(const std::string& text);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Coloring file: one line of n space-separated non-negative integers.
Coloring parse_coloring(const std::string& text, int n);

struct RemovalTrace {
  std::vector<std::pair<int, int>> removed;  // (vertex, degree at removal)
};

// Iteratively deletes the lowest-index vertex of degree < k.  The returned
// graph is compacted onto 0..m-1 (ascending survivors); the trace records
// original vertex ids.
std::pair<Graph, RemovalTrace> k_core(const Graph& g, int k);

// Id-preserving variant used by the extraction pipeline: returns the mask of
// surviving vertices inside `active`.
Mask k_core_mask(const Graph& g, int k, Mask active, RemovalTrace* trace = nullptr);

// Maximal connected vertex sets, ordered by smallest member.  Vertices
// outside `active` are ignored.
std::vector<Mask> connected_components(const Graph& g);
std::vector<Mask> connected_components(const Graph& g, Mask active);

// Subgraph induced by `keep`, vertex ids preserved (others become isolated).
Graph induced(const Graph& g, Mask keep);
// Subgraph induced by `keep`, relabeled onto 0..m-1 in ascending id order.
Graph compact(const Graph& g, Mask keep, std::vector<int>* old_ids = nullptr);
// Edges with both endpoints in `active`.
int edge_count(const Graph& g, Mask active);
// Relabels: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace chroma
