#include "chroma/pattern.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "chroma/canonical.hpp"

namespace chroma {

// ---------------------------------------------------------------------------
// Tree patterns

namespace {

std::string tree_display_name(const TreePattern& t) {
  const Graph& g = t.graph;
  int n = g.n;
  int maxdeg = 0, big = 0;
  for (int v = 0; v < n; ++v) {
    maxdeg = std::max(maxdeg, g.degree(v));
    if (g.degree(v) >= 2) ++big;
  }
  if (n == 2) return "P_1";
  if (maxdeg <= 2) return "P_" + std::to_string(t.k);
  if (big == 1) return "K_{1," + std::to_string(t.k) + "}";
  if (big == 2) {
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
      if (g.degree(w) >= 2) (u < 0 ? u : v) = w;
    if (g.has_edge(u, v)) {
      int a = g.degree(u) - 1, b = g.degree(v) - 1;
      if (a > b) std::swap(a, b);
      return "S_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
  }
  return "T[" + canonical_form(g).bytes + "]";
}

}  // namespace

TreePattern make_tree(std::vector<std::pair<int, int>> edges) {
  TreePattern t;
  t.k = (int)edges.size();
  if (t.k < 1) throw std::invalid_argument("tree must have at least one edge");
  if (t.k + 1 > kMaxVertices) throw SizeError("tree too large");
  t.edges = std::move(edges);
  t.graph = Graph(t.k + 1);
  for (auto [u, v] : t.edges) t.graph.add_edge(u, v);  // validates range/loops
  if (t.graph.edge_count() != t.k) throw std::invalid_argument("duplicate tree edge");
  auto comps = connected_components(t.graph);
  if (comps.size() != 1) throw std::invalid_argument("tree edges do not form a connected graph");
  // connected with k edges on k+1 vertices => acyclic
  for (int v = 0; v <= t.k; ++v)
    if (t.graph.degree(v) == 1) t.leaves |= bit(v);
  // unique 2-coloring by BFS parity from vertex 0
  std::vector<int> depth(t.k + 1, -1);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (depth[v] & 1) t.side |= bit(v);
    for (int w : bits(t.graph.adj[v]))
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        q.push(w);
      }
  }
  Mask all = full_mask(t.k + 1);
  bool both = (t.leaves & t.side) != 0 && (t.leaves & all & ~t.side) != 0;
  t.leaf_profile = both ? LeafProfile::MixedSides : LeafProfile::AllSameSide;
  t.name = tree_display_name(t);
  return t;
}

TreePattern parse_tree(const std::string& text) {
  std::istringstream in(text);
  int k;
  if (!(in >> k)) throw std::invalid_argument("tree file: expected edge count");
  if (k < 1 || k + 1 > kMaxVertices)
    throw std::invalid_argument("tree file: edge count " + std::to_string(k) + " unsupported");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("tree file: expected " + std::to_string(k) + " edges");
    edges.emplace_back(u, v);
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("tree file: trailing tokens");
  return make_tree(std::move(edges));
}

std::string emit_tree(const TreePattern& t) {
  std::ostringstream out;
  out << t.k << '\n';
  for (auto [u, v] : t.edges) out << u << ' ' << v << '\n';
  return out.str();
}

TreePattern path_pattern(int ell) {
  if (ell < 1) throw std::invalid_argument("path length must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < ell; ++i) e.emplace_back(i, i + 1);
  return make_tree(std::move(e));
}

TreePattern star_pattern(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_tree(std::move(e));
}

TreePattern double_star_pattern(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("double star needs a, b >= 1");
  // centers 0 and 1, then a leaves of 0, then b leaves of 1
  std::vector<std::pair<int, int>> e{{0, 1}};
  for (int i = 0; i < a; ++i) e.emplace_back(0, 2 + i);
  for (int i = 0; i < b; ++i) e.emplace_back(1, 2 + a + i);
  return make_tree(std::move(e));
}

LeafProfile classify_tree(const TreePattern& t) { return t.leaf_profile; }

PathWitness odd_leaf_path(const TreePattern& t) {
  if (t.leaf_profile != LeafProfile::MixedSides)
    throw std::invalid_argument("odd_leaf_path: tree has all leaves on one side");
  // Unique tree paths; pick the shortest odd leaf-leaf one, ties by (u,v).
  int n = t.k + 1;
  int best_u = -1, best_v = -1, best_d = n + 1;
  std::vector<int> par(n), dist(n);
  for (int u : bits(t.leaves)) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[u] = 0;
    par[u] = -1;
    q.push(u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int w : bits(t.graph.adj[x]))
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          par[w] = x;
          q.push(w);
        }
    }
    for (int v : bits(t.leaves & ~full_mask(u + 1)))
      if ((dist[v] & 1) && dist[v] < best_d) {
        best_d = dist[v];
        best_u = u;
        best_v = v;
      }
  }
  // rebuild the path for the chosen pair
  std::fill(dist.begin(), dist.end(), -1);
  std::queue<int> q;
  dist[best_u] = 0;
  par[best_u] = -1;
  q.push(best_u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int w : bits(t.graph.adj[x]))
      if (dist[w] < 0) {
        dist[w] = dist[x] + 1;
        par[w] = x;
        q.push(w);
      }
  }
  std::vector<int> path;
  for (int x = best_v; x >= 0; x = par[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return PathWitness{std::move(path)};
}

// ---------------------------------------------------------------------------
// Fixed-length path search
//
// Depth-first extension over states (endpoint, visited mask).  A state fully
// determines whether any completion exists, so each is expanded at most once;
// with children taken in ascending order the first complete path found is the
// lexicographically least one for its start vertex.

namespace {

struct PathSearch {
  const Graph& g;
  Mask active;
  int want;  // vertices in a complete path
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  PathSearch(const Graph& g_, Mask active_, int want_)
      : g(g_), active(active_), want(want_), stamp((size_t)g_.n << g_.n, 0) {}

  bool seen(int v, Mask m) {
    auto& s = stamp[((size_t)v << g.n) | m];
    if (s == epoch) return true;
    s = epoch;
    return false;
  }
};

}  // namespace

std::vector<std::pair<int, int>> all_path_endpoint_pairs(const Graph& g, int ell) {
  if (ell < 1) throw std::invalid_argument("path length must be >= 1");
  std::vector<std::pair<int, int>> out;
  if (ell + 1 > g.n) return out;
  PathSearch ps(g, full_mask(g.n), ell + 1);
  std::vector<std::vector<bool>> pair_found(g.n, std::vector<bool>(g.n, false));
  for (int start = 0; start < g.n; ++start) {
    ++ps.epoch;
    ps.seen(start, bit(start));
    auto dfs = [&](auto&& self, int v, Mask m) -> void {
      if (popcount(m) == ps.want) {
        int a = std::min(start, v), b = std::max(start, v);
        pair_found[a][b] = true;
        return;
      }
      for (int w : bits(g.adj[v] & ~m))
        if (!ps.seen(w, m | bit(w))) self(self, w, m | bit(w));
    };
    dfs(dfs, start, bit(start));
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (pair_found[a][b]) out.emplace_back(a, b);
  return out;
}

std::optional<PathWitness> find_bichromatic_path(const Graph& g, const Coloring& c, int ell,
                                                 Mask active) {
  if (ell < 1) throw std::invalid_argument("path length must be >= 1");
  if ((int)c.size() != g.n) throw std::invalid_argument("coloring length mismatch");
  if (ell + 1 > popcount(active)) return std::nullopt;
  PathSearch ps(g, active, ell + 1);
  std::vector<int> path;
  path.reserve(ell + 1);
  for (int start : bits(active)) {
    // cheap prune: some reachable vertex must carry a different color
    Mask other = 0;
    for (int v : bits(active))
      if (c[v] != c[start]) other |= bit(v);
    if (!other) continue;
    ++ps.epoch;
    ps.seen(start, bit(start));
    path.assign(1, start);
    std::optional<PathWitness> found;
    auto dfs = [&](auto&& self, int v, Mask m) -> bool {
      if (popcount(m) == ps.want) {
        if (c[start] != c[v]) {
          found = PathWitness{path};
          return true;
        }
        return false;
      }
      if (!(other & ~m)) return false;  // final endpoint can no longer differ
      for (int w : bits(g.adj[v] & active & ~m))
        if (!ps.seen(w, m | bit(w))) {
          path.push_back(w);
          if (self(self, w, m | bit(w))) return true;
          path.pop_back();
        }
      return false;
    };
    if (dfs(dfs, start, bit(start))) return found;
  }
  return std::nullopt;
}

std::optional<PathWitness> find_bichromatic_path(const ColoredGraph& cg, int ell) {
  return find_bichromatic_path(cg.graph, cg.coloring, ell, full_mask(cg.graph.n));
}

// ---------------------------------------------------------------------------
// Smallest long cycle

std::optional<CycleWitness> smallest_long_cycle(const Graph& g, int ell_min, Mask active) {
  if (ell_min < 3) throw std::invalid_argument("cycle length must be >= 3");
  int avail = popcount(active);
  std::vector<int> path;
  for (int len = ell_min; len <= avail; ++len) {
    PathSearch ps(g, active, len);
    for (int start : bits(active)) {
      // only cycles whose minimum vertex is the start: all others above it
      Mask allowed = active & ~full_mask(start + 1);
      if (popcount(allowed) < len - 1) continue;
      ++ps.epoch;
      ps.seen(start, bit(start));
      path.assign(1, start);
      std::optional<CycleWitness> found;
      auto dfs = [&](auto&& self, int v, Mask m) -> bool {
        if (popcount(m) == len) {
          if (g.has_edge(v, start)) {
            found = CycleWitness{path};
            return true;
          }
          return false;
        }
        for (int w : bits(g.adj[v] & allowed & ~m))
          if (!ps.seen(w, m | bit(w))) {
            path.push_back(w);
            if (self(self, w, m | bit(w))) return true;
            path.pop_back();
          }
        return false;
      };
      if (dfs(dfs, start, bit(start))) return found;
    }
  }
  return std::nullopt;
}

std::optional<CycleWitness> smallest_long_cycle(const Graph& g, int ell_min) {
  return smallest_long_cycle(g, ell_min, full_mask(g.n));
}

// ---------------------------------------------------------------------------
// Tree embeddings

void for_each_embedding(const Graph& g, const TreePattern& t,
                        const std::function<bool(const std::vector<int>&)>& fn, bool induced) {
  int tn = t.k + 1;
  if (tn > g.n) return;
  // BFS order from tree vertex 0, so each vertex after the first attaches to
  // an already-placed parent.
  std::vector<int> order, parent(tn, -1);
  {
    std::vector<bool> seen(tn, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : bits(t.graph.adj[v]))
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          q.push(w);
        }
    }
  }
  std::vector<int> image(tn, -1);
  bool stop = false;
  auto place = [&](auto&& self, int idx, Mask used) -> void {
    if (stop) return;
    if (idx == tn) {
      if (induced) {
        for (int a = 0; a < tn && !stop; ++a)
          for (int b = a + 1; b < tn; ++b)
            if (!t.graph.has_edge(a, b) && g.has_edge(image[a], image[b])) return;
      }
      if (!fn(image)) stop = true;
      return;
    }
    int tv = order[idx];
    Mask cands = parent[tv] < 0 ? full_mask(g.n) : g.adj[image[parent[tv]]];
    cands &= ~used;
    for (int hv : bits(cands)) {
      if (g.degree(hv) < t.graph.degree(tv)) continue;
      image[tv] = hv;
      self(self, idx + 1, used | bit(hv));
      if (stop) return;
    }
    image[tv] = -1;
  };
  place(place, 0, 0);
}

std::vector<Mask> leaf_image_sets(const Graph& g, const TreePattern& t, bool induced) {
  std::vector<Mask> out;
  std::vector<bool> seen(size_t{1} << g.n, false);
  for_each_embedding(
      g, t,
      [&](const std::vector<int>& image) {
        Mask ls = 0;
        for (int tv : bits(t.leaves)) ls |= bit(image[tv]);
        if (!seen[ls]) {
          seen[ls] = true;
          out.push_back(ls);
        }
        return true;
      },
      induced);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_tree(const Graph& g, const TreePattern& t) {
  bool found = false;
  for_each_embedding(g, t, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Double stars

std::optional<DoubleStarWitness> find_double_star(const Graph& g, int a, int b, Mask active) {
  if (a < 1 || b < 1) throw std::invalid_argument("double star needs a, b >= 1");
  for (int u : bits(active)) {
    for (int v : bits(g.adj[u] & active)) {
      Mask nu = g.adj[u] & active & ~bit(v);
      Mask nv = g.adj[v] & active & ~bit(u);
      if (popcount(nu) < a || popcount(nv) < b) continue;
      // greedy: fill A preferring vertices useless to B
      std::vector<int> A;
      for (int w : bits(nu & ~nv))
        if ((int)A.size() < a) A.push_back(w);
      for (int w : bits(nu & nv))
        if ((int)A.size() < a) A.push_back(w);
      Mask amask = 0;
      for (int w : A) amask |= bit(w);
      std::vector<int> B;
      for (int w : bits(nv & ~amask))
        if ((int)B.size() < b) B.push_back(w);
      if ((int)A.size() == a && (int)B.size() == b) {
        std::sort(A.begin(), A.end());
        return DoubleStarWitness{u, v, std::move(A), std::move(B)};
      }
      // exhaustive assignment over A-subsets; the greedy covers everything
      // realizable in practice, this is the safety net
      std::vector<int> pool;
      for (int w : bits(nu)) pool.push_back(w);
      std::vector<int> pick;
      std::optional<DoubleStarWitness> found;
      auto choose = [&](auto&& self, size_t i) -> bool {
        if ((int)pick.size() == a) {
          Mask pm = 0;
          for (int w : pick) pm |= bit(w);
          if (popcount(nv & ~pm) >= b) {
            std::vector<int> B2;
            for (int w : bits(nv & ~pm))
              if ((int)B2.size() < b) B2.push_back(w);
            found = DoubleStarWitness{u, v, pick, std::move(B2)};
            return true;
          }
          return false;
        }
        for (size_t j = i; j < pool.size(); ++j) {
          pick.push_back(pool[j]);
          if (self(self, j + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (choose(choose, 0)) return found;
    }
  }
  return std::nullopt;
}

std::optional<DoubleStarWitness> find_double_star(const Graph& g, int a, int b) {
  return find_double_star(g, a, b, full_mask(g.n));
}

// ---------------------------------------------------------------------------
// Validators

bool validate_path(const Graph& g, const PathWitness& w, int expected_length) {
  if (w.vertices.empty()) return false;
  if (expected_length >= 0 && w.length() != expected_length) return false;
  Mask seen = 0;
  for (size_t i = 0; i < w.vertices.size(); ++i) {
    int v = w.vertices[i];
    if (v < 0 || v >= g.n || (seen & bit(v))) return false;
    seen |= bit(v);
    if (i > 0 && !g.has_edge(w.vertices[i - 1], v)) return false;
  }
  return true;
}

bool validate_cycle(const Graph& g, const CycleWitness& w, int min_length) {
  if (w.length() < std::max(3, min_length)) return false;
  Mask seen = 0;
  for (size_t i = 0; i < w.vertices.size(); ++i) {
    int v = w.vertices[i];
    if (v < 0 || v >= g.n || (seen & bit(v))) return false;
    seen |= bit(v);
    if (i > 0 && !g.has_edge(w.vertices[i - 1], v)) return false;
  }
  return g.has_edge(w.vertices.back(), w.vertices.front());
}

bool validate_double_star(const Graph& g, const DoubleStarWitness& w, int a, int b) {
  if (w.u < 0 || w.v < 0 || w.u >= g.n || w.v >= g.n) return false;
  if (!g.has_edge(w.u, w.v)) return false;
  if ((int)w.a_leaves.size() != a || (int)w.b_leaves.size() != b) return false;
  Mask seen = bit(w.u) | bit(w.v);
  for (int x : w.a_leaves) {
    if (x < 0 || x >= g.n || (seen & bit(x)) || !g.has_edge(w.u, x)) return false;
    seen |= bit(x);
  }
  for (int x : w.b_leaves) {
    if (x < 0 || x >= g.n || (seen & bit(x)) || !g.has_edge(w.v, x)) return false;
    seen |= bit(x);
  }
  return true;
}

}  // namespace chroma
