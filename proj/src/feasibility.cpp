#include "chroma/feasibility.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace chroma {

std::vector<int> ForcedPartition::class_labels() const {
  std::vector<int> label(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = root(v);
    if (label[r] < 0) label[r] = next++;
    label[v] = label[r];
  }
  return label;
}

std::vector<Mask> ForcedPartition::chain(int u, int v) const {
  if (u == v) return {};
  std::vector<int> prev(n, -1), via(n, -1);
  std::queue<int> q;
  q.push(u);
  prev[u] = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == v) break;
    for (const auto& e : forest[x])
      if (prev[e.to] < 0) {
        prev[e.to] = x;
        via[e.to] = e.leafset;
        q.push(e.to);
      }
  }
  if (prev[v] < 0) throw InternalError("forced partition: no forest path between class members");
  std::vector<Mask> out;
  for (int x = v; x != u; x = prev[x]) out.push_back(leafsets[via[x]]);
  std::reverse(out.begin(), out.end());
  return out;
}

ForcedPartition forced_partition(const Graph& g, const TreePattern& t) {
  ForcedPartition fp;
  fp.n = g.n;
  fp.parent.resize(g.n);
  for (int v = 0; v < g.n; ++v) fp.parent[v] = v;
  fp.forest.assign(g.n, {});
  fp.leafsets = leaf_image_sets(g, t);
  for (int idx = 0; idx < (int)fp.leafsets.size(); ++idx) {
    Mask ls = fp.leafsets[idx];
    int first = lowest_bit(ls);
    for (int v : bits(ls & ~bit(first))) {
      int ra = fp.root(first), rb = fp.root(v);
      if (ra == rb) continue;
      fp.parent[rb] = ra;
      fp.forest[first].push_back({v, idx});
      fp.forest[v].push_back({first, idx});
    }
  }
  return fp;
}

FeasibilityOutcome decide_feasible(const Graph& g, const TreePattern& t) {
  ForcedPartition fp = forced_partition(g, t);
  for (int u = 0; u < g.n; ++u)
    for (int v : bits(g.adj[u] & ~full_mask(u + 1)))
      if (fp.same(u, v)) {
        FeasibilityOutcome out;
        out.feasible = false;
        out.conflict_edge = {u, v};
        out.chain = fp.chain(u, v);
        return out;
      }
  FeasibilityOutcome out;
  out.feasible = true;
  out.coloring = fp.class_labels();
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle.  Its copy enumeration is a plain injective-map search,
// deliberately separate from the production embedding code.

namespace {

std::vector<Mask> naive_leaf_sets(const Graph& g, const TreePattern& t) {
  int tn = t.k + 1;
  std::vector<Mask> out;
  std::set<Mask> seen;
  if (tn > g.n) return out;
  std::vector<int> image(tn, -1);
  auto rec = [&](auto&& self, int tv, Mask used) -> void {
    if (tv == tn) {
      for (auto [a, b] : t.edges)
        if (!g.has_edge(image[a], image[b])) return;
      Mask ls = 0;
      for (int x : bits(t.leaves)) ls |= bit(image[x]);
      if (seen.insert(ls).second) out.push_back(ls);
      return;
    }
    for (int hv = 0; hv < g.n; ++hv) {
      if (used & bit(hv)) continue;
      image[tv] = hv;
      self(self, tv + 1, used | bit(hv));
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

bool brute_force_feasible(const Graph& g, const TreePattern& t) {
  int limit = soft_max_n(7);
  if (g.n > limit)
    throw SizeError("brute_force_feasible supports n <= " + std::to_string(limit));
  if (g.n == 0) return true;
  std::vector<Mask> sets = naive_leaf_sets(g, t);
  // restricted-growth strings: colors[0] = 0, colors[i] <= 1 + max(prefix)
  std::vector<int> c(g.n, 0);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == g.n) {
      for (int u = 0; u < g.n; ++u)
        for (int w : bits(g.adj[u] & ~full_mask(u + 1)))
          if (c[u] == c[w]) return false;
      for (Mask ls : sets) {
        int col = c[lowest_bit(ls)];
        for (int x : bits(ls))
          if (c[x] != col) return false;
      }
      return true;
    }
    for (int col = 0; col <= used; ++col) {
      c[v] = col;
      if (self(self, v + 1, std::max(used, col + 1))) return true;
    }
    return false;
  };
  return rec(rec, 1, 1);
}

bool check_certificate(const Graph& g, const TreePattern& t, const FeasibilityOutcome& out) {
  std::vector<Mask> sets = leaf_image_sets(g, t);
  if (out.feasible) {
    if ((int)out.coloring.size() != g.n) return false;
    for (int x : out.coloring)
      if (x < 0) return false;
    if (!is_proper(g, out.coloring)) return false;
    for (Mask ls : sets) {
      int col = out.coloring[lowest_bit(ls)];
      for (int x : bits(ls))
        if (out.coloring[x] != col) return false;
    }
    return true;
  }
  auto [u, v] = out.conflict_edge;
  if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v)) return false;
  if (out.chain.empty()) return false;
  std::set<Mask> genuine(sets.begin(), sets.end());
  for (Mask ls : out.chain)
    if (!genuine.count(ls)) return false;
  if (!(out.chain.front() & bit(u))) return false;
  if (!(out.chain.back() & bit(v))) return false;
  for (size_t i = 0; i + 1 < out.chain.size(); ++i)
    if (!(out.chain[i] & out.chain[i + 1])) return false;
  return true;
}

nlohmann::ordered_json outcome_to_json(const FeasibilityOutcome& out) {
  nlohmann::ordered_json j;
  j["feasible"] = out.feasible;
  if (out.feasible) {
    j["coloring"] = out.coloring;
  } else {
    j["conflict_edge"] = {out.conflict_edge.first, out.conflict_edge.second};
    auto chain = nlohmann::ordered_json::array();
    for (Mask ls : out.chain) {
      auto set = nlohmann::ordered_json::array();
      for (int v : bits(ls)) set.push_back(v);
      chain.push_back(set);
    }
    j["chain"] = chain;
  }
  return j;
}

}  // namespace chroma
