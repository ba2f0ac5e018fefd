#include "chroma/canonical.hpp"

#include <algorithm>

namespace chroma {

namespace {

// Searches all vertex orderings for the lexicographically maximal
// upper-triangle bit string, read in graph6 column-major order.  Column d
// (the adjacency of the vertex placed at position d to positions 0..d-1) is
// fully determined once position d is filled, so prefixes compare cleanly.
//
// Invariant at every node: best_cols[0..depth-1] equals the current prefix.
// A column strictly below the recorded best prunes; one strictly above
// overwrites it and invalidates everything deeper.  Ties recurse.  Vertices
// that are twins (swapping them is an automorphism) generate identical
// subtrees, so only the first of each twin group is tried.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<Mask> best_cols;  // best_cols[d]: adjacency bits to positions 0..d-1
  int best_len = 0;
  std::vector<int> pos_of;   // vertex -> position, -1 if unplaced
  std::vector<int> vertex_at;
  std::vector<int> best_perm;  // vertex -> position of the recorded maximum
  bool perm_dirty = true;

  explicit CanonSearch(const Graph& g_)
      : g(g_), n(g_.n), best_cols(n, 0), pos_of(n, -1), vertex_at(n, -1), best_perm(n, -1) {}

  Mask column(int w, int depth) const {
    Mask col = 0;
    for (int i = 0; i < depth; ++i)
      if (g.has_edge(w, vertex_at[i])) col |= bit(depth - 1 - i);
    return col;
  }

  static bool twins(const Graph& g, int u, int w) {
    return (g.adj[u] & ~bit(w)) == (g.adj[w] & ~bit(u));
  }

  void descend(int depth) {
    if (depth == n) {
      if (perm_dirty) {
        best_perm = pos_of;
        perm_dirty = false;
      }
      return;
    }
    std::vector<std::pair<Mask, int>> cands;
    for (int w = 0; w < n; ++w) {
      if (pos_of[w] >= 0) continue;
      bool dup = false;
      for (auto& [c, u] : cands)
        if (twins(g, u, w)) { dup = true; break; }
      if (!dup) cands.emplace_back(column(w, depth), w);
    }
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    for (auto& [col, w] : cands) {
      if (best_len > depth) {
        if (col < best_cols[depth]) continue;
        if (col > best_cols[depth]) {
          best_cols[depth] = col;
          best_len = depth + 1;
          perm_dirty = true;
        }
      } else {
        best_cols[depth] = col;
        best_len = depth + 1;
        perm_dirty = true;
      }
      pos_of[w] = depth;
      vertex_at[depth] = w;
      descend(depth + 1);
      pos_of[w] = -1;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  int limit = soft_max_n(10);
  if (g.n > limit)
    throw SizeError("canonical_form supports n <= " + std::to_string(limit) + ", got " +
                    std::to_string(g.n));
  if (g.n == 0) return CanonicalForm{emit_graph6(g)};
  CanonSearch s(g);
  s.descend(0);
  return CanonicalForm{emit_graph6(relabel(g, s.best_perm))};
}

Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g).bytes); }

}  // namespace chroma
