#pragma once

#include <random>

#include "chroma/graph.hpp"

namespace testutil {

inline chroma::Graph complete(int n) {
  chroma::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline chroma::Graph cycle(int n) {
  chroma::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline chroma::Graph path_graph(int n) {
  chroma::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline chroma::Graph random_graph(int n, int m, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  chroma::Graph g(n);
  for (int i = 0; i < m && i < (int)pairs.size(); ++i) g.add_edge(pairs[i].first, pairs[i].second);
  return g;
}

}  // namespace testutil
