#pragma once

// Exact canonical forms for small graphs: isomorphic inputs map to identical
// byte strings, non-isomorphic inputs to distinct ones.  Brute force over
// vertex orderings with branch-and-bound pruning; intended for n <= 10.

#include <compare>
#include <string>

#include "chroma/graph.hpp"

namespace chroma {

struct CanonicalForm {
  // graph6 encoding of the canonically relabeled graph (length byte + the
  // lexicographically maximal upper-triangle bit string).
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
// The canonical representative itself (parse of canonical_form(g).bytes).
Graph canonical_graph(const Graph& g);

}  // namespace chroma
