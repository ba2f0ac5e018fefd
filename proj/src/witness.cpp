#include "chroma/witness.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace chroma {

// ---------------------------------------------------------------------------
// Forced chains

PathWitness scan_forced_chain(const Graph& g, const ForcedChain& chain, const Coloring& c) {
  if ((int)c.size() != g.n) throw std::invalid_argument("coloring length mismatch");
  if (chain.links.empty()) throw CertificateError("forced chain is empty");
  if (chain.target_length < 1) throw CertificateError("forced chain has no target length");
  for (const auto& link : chain.links)
    if (!validate_path(g, link, chain.target_length))
      throw CertificateError("forced chain link is not a valid path of the target length");
  for (size_t i = 0; i + 1 < chain.links.size(); ++i)
    if (chain.links[i].vertices.back() != chain.links[i + 1].vertices.front())
      throw CertificateError("consecutive chain links do not share an endpoint");
  int first = chain.links.front().vertices.front();
  int last = chain.links.back().vertices.back();
  if (!g.has_edge(first, last))
    throw CertificateError("chain extremes are not adjacent in the host graph");
  for (const auto& link : chain.links)
    if (c[link.vertices.front()] != c[link.vertices.back()]) return link;
  // Impossible for a proper coloring: every link monochromatic would force the
  // two adjacent extremes onto the same color.
  throw InternalError("forced chain has no bichromatic link under a proper coloring");
}

// ---------------------------------------------------------------------------
// Bichromatic path extraction

namespace {

PathWitness reversed(PathWitness p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

// One forced equality between two cycle positions: the links, read in order,
// connect cycle[pa] to cycle[pb], and each is a (2k+1)-path whose endpoints
// must share a color unless it is itself a witness.
struct Forcing {
  int pa, pb;
  std::vector<PathWitness> links;
};

struct CycleContext {
  const Graph& g;
  const Coloring& c;
  Mask active;
  std::vector<int> cyc;  // the cycle, in witness order
  int L;                 // target path length 2k+1
  Mask cyc_mask = 0;

  CycleContext(const Graph& g_, const Coloring& c_, Mask active_, std::vector<int> cyc_, int L_)
      : g(g_), c(c_), active(active_), cyc(std::move(cyc_)), L(L_) {
    for (int v : cyc) cyc_mask |= bit(v);
  }

  int ell() const { return (int)cyc.size(); }
  int pos_mod(int p) const { return ((p % ell()) + ell()) % ell(); }
  int at(int p) const { return cyc[pos_mod(p)]; }
  Mask off_neighbors(int p) const { return g.adj[at(p)] & active & ~cyc_mask; }

  // steps+1 vertices walking along the cycle from position `from`.
  std::vector<int> walk(int from, int steps, int dir) const {
    std::vector<int> out;
    out.reserve(steps + 1);
    for (int s = 0; s <= steps; ++s) out.push_back(at(from + dir * s));
    return out;
  }

  std::vector<int> walk_prefixed(std::vector<int> pre, int from, int steps, int dir) const {
    auto tail = walk(from, steps, dir);
    pre.insert(pre.end(), tail.begin(), tail.end());
    return pre;
  }
};

// Immediate witnesses available when the cycle has exactly 2k+1 vertices and
// some off-cycle vertex sees it twice in a forbidden pattern.
std::optional<PathWitness> short_cycle_prechecks(const CycleContext& cx,
                                                 ExtractionTrace::Level& lvl) {
  int ell = cx.ell();
  Mask seen_off = 0;
  for (int i = 0; i < ell; ++i) seen_off |= cx.off_neighbors(i);
  for (int u : bits(seen_off)) {
    std::vector<int> ps;
    for (int i = 0; i < ell; ++i)
      if (cx.g.has_edge(u, cx.at(i))) ps.push_back(i);
    // consecutive neighbors: u + the long arc form a (2k+2)-cycle; opening it
    // leaves a (2k+1)-path with adjacent, hence differently colored, endpoints
    for (size_t x = 0; x < ps.size(); ++x)
      for (size_t y = 0; y < ps.size(); ++y) {
        if (x == y) continue;
        int i = ps[x], j = ps[y];
        if (cx.pos_mod(j - i) == 1) {
          auto path = cx.walk_prefixed({u}, j, ell - 1, +1);  // u, c_{i+1}, ..., c_i
          lvl.note = "off-cycle vertex with consecutive cycle neighbors";
          return PathWitness{std::move(path)};
        }
      }
    // neighbors three apart: two full wrap paths from u pin the colors of an
    // adjacent pair, so one of the two links must be bichromatic
    for (size_t x = 0; x < ps.size(); ++x)
      for (size_t y = 0; y < ps.size(); ++y) {
        if (x == y) continue;
        int i = ps[x], j = ps[y];
        if (ell > 3 && cx.pos_mod(j - i) == 3) {
          PathWitness pa{cx.walk_prefixed({u}, i, ell - 1, -1)};  // ends at c_{i+1}
          PathWitness pb{cx.walk_prefixed({u}, j, ell - 1, +1)};  // ends at c_{i+2}
          ForcedChain chain{{reversed(pa), pb}, cx.L};
          lvl.note = "off-cycle vertex with cycle neighbors three apart";
          lvl.chain_links = 2;
          lvl.chain_edge = {cx.at(i + 1), cx.at(i + 2)};
          return scan_forced_chain(cx.g, chain, cx.c);
        }
      }
  }
  return std::nullopt;
}

// Builds the forced-equality graph over cycle positions and searches it for a
// class containing two adjacent host vertices; the forest path between them
// becomes the forced chain.
std::optional<PathWitness> forced_chain_witness(const CycleContext& cx,
                                                ExtractionTrace::Level& lvl) {
  int ell = cx.ell();
  std::vector<Forcing> forcings;
  if (ell >= cx.L + 1) {
    // plain cycle arcs of exactly 2k+1 edges
    for (int p = 0; p < ell; ++p)
      forcings.push_back({p, cx.pos_mod(p + cx.L), {PathWitness{cx.walk(p, cx.L, +1)}}});
  }
  for (int i = 0; i < ell; ++i) {
    Mask offs = cx.off_neighbors(i);
    if (!offs) continue;
    int u = lowest_bit(offs);
    // the two wrap paths through u force c_{i+L-1} and c_{i-(L-1)} equal
    int pa = cx.pos_mod(i + cx.L - 1), pb = cx.pos_mod(i - (cx.L - 1));
    if (pa != pb) {
      PathWitness plus{cx.walk_prefixed({u}, i, cx.L - 1, +1)};
      PathWitness minus{cx.walk_prefixed({u}, i, cx.L - 1, -1)};
      forcings.push_back({pa, pb, {reversed(plus), minus}});
    }
    if (ell == cx.L) {
      // a pendant path u,w off position i reaches two edges less far
      Mask tails = cx.g.adj[u] & cx.active & ~cx.cyc_mask;
      if (tails) {
        int w = lowest_bit(tails);
        int qa = cx.pos_mod(i + cx.L - 2), qb = cx.pos_mod(i - (cx.L - 2));
        if (qa != qb) {
          PathWitness plus{cx.walk_prefixed({w, u}, i, cx.L - 2, +1)};
          PathWitness minus{cx.walk_prefixed({w, u}, i, cx.L - 2, -1)};
          forcings.push_back({qa, qb, {reversed(plus), minus}});
        }
      }
    }
  }

  // union-find over positions with a provenance forest
  std::vector<int> parent(ell);
  for (int p = 0; p < ell; ++p) parent[p] = p;
  auto root = [&](int p) {
    while (parent[p] != p) p = parent[p];
    return p;
  };
  std::vector<std::vector<std::pair<int, int>>> forest(ell);  // (other pos, forcing idx)
  for (int f = 0; f < (int)forcings.size(); ++f) {
    int ra = root(forcings[f].pa), rb = root(forcings[f].pb);
    if (ra == rb) continue;
    parent[rb] = ra;
    forest[forcings[f].pa].push_back({forcings[f].pb, f});
    forest[forcings[f].pb].push_back({forcings[f].pa, f});
  }

  for (int i = 0; i < ell; ++i)
    for (int j = i + 1; j < ell; ++j) {
      if (!cx.g.has_edge(cx.at(i), cx.at(j))) continue;
      if (root(i) != root(j)) continue;
      // forest path i -> j, links concatenated with matching orientation
      std::vector<int> prev(ell, -1), via(ell, -1);
      std::queue<int> q;
      q.push(i);
      prev[i] = i;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (auto [y, f] : forest[x])
          if (prev[y] < 0) {
            prev[y] = x;
            via[y] = f;
            q.push(y);
          }
      }
      std::vector<int> route;
      for (int x = j; x != i; x = prev[x]) route.push_back(x);
      std::reverse(route.begin(), route.end());
      ForcedChain chain;
      chain.target_length = cx.L;
      int cur = i;
      for (int y : route) {
        const Forcing& f = forcings[via[y]];
        if (f.pa == cur) {
          for (const auto& l : f.links) chain.links.push_back(l);
        } else {
          for (auto it = f.links.rbegin(); it != f.links.rend(); ++it)
            chain.links.push_back(reversed(*it));
        }
        cur = y;
      }
      lvl.chain_links = (int)chain.links.size();
      lvl.chain_edge = {cx.at(i), cx.at(j)};
      return scan_forced_chain(cx.g, chain, cx.c);
    }
  return std::nullopt;
}

PathWitness extract_impl(const Graph& g, const Coloring& c, int k, Mask active,
                         ExtractionTrace& trace, int depth) {
  if (depth > g.n) throw InternalError("path extraction recursed deeper than n");
  size_t li = trace.levels.size();
  trace.levels.emplace_back();
  auto lvl = [&]() -> ExtractionTrace::Level& { return trace.levels[li]; };
  int L = 2 * k + 1;

  RemovalTrace rt;
  Mask core = k_core_mask(g, k, active, &rt);
  lvl().removed = rt.removed;
  if (!core) throw InternalError("core reduction emptied a dense graph");

  Mask comp = 0;
  for (Mask m : connected_components(g, core))
    if (edge_count(g, m) > k * popcount(m)) {
      comp = m;
      break;
    }
  if (!comp) throw InternalError("no component exceeds the density bound");
  for (int v : bits(comp)) lvl().component.push_back(v);

  auto cyc = smallest_long_cycle(g, L, comp);
  if (!cyc) throw InternalError("dense component has no cycle of length >= 2k+1");
  lvl().cycle = cyc->vertices;
  int ell = cyc->length();
  lvl().case_label = ell == L       ? "l=2k+1"
                     : ell == L + 1 ? "l=2k+2"
                     : ell == L + 2 ? "l=2k+3"
                                    : "l>=2k+4";

  CycleContext cx(g, c, comp, cyc->vertices, L);
  for (int i = 0; i < ell; ++i) {
    Mask offs = cx.off_neighbors(i);
    if (offs) {
      std::vector<int> outs;
      for (int u : bits(offs)) outs.push_back(u);
      lvl().outgoing.emplace_back(cx.at(i), std::move(outs));
    }
  }

  // A (2k+2)-cycle opens directly into a path with adjacent endpoints.
  if (ell == L + 1) {
    lvl().note = "cycle opened at its closing edge";
    return PathWitness{cyc->vertices};
  }

  if (ell == L) {
    if (auto w = short_cycle_prechecks(cx, lvl())) return *w;
  }

  if (auto w = forced_chain_witness(cx, lvl())) return *w;

  if (ell == L) {
    // two consecutive outgoing cycle vertices whose removal keeps the graph
    // over the bound: recurse on the smaller graph
    int n_comp = popcount(comp), e_comp = edge_count(g, comp);
    for (int i = 0; i < ell; ++i) {
      int j = cx.pos_mod(i + 1);
      if (!cx.off_neighbors(i) || !cx.off_neighbors(j)) continue;
      int du = popcount(g.adj[cx.at(i)] & comp), dv = popcount(g.adj[cx.at(j)] & comp);
      if (e_comp - (du + dv - 1) > k * (n_comp - 2)) {
        lvl().deleted_pair = {cx.at(i), cx.at(j)};
        Mask next = comp & ~bit(cx.at(i)) & ~bit(cx.at(j));
        return extract_impl(g, c, k, next, trace, depth + 1);
      }
    }
  }

  // Documented corner cases (small k) can leave every device inapplicable;
  // the exhaustive search still cannot fail while the density bound holds.
  auto fb = find_bichromatic_path(g, c, L, comp);
  if (fb) {
    lvl().fallback = true;
    lvl().note = "forcing devices inapplicable; exhaustive search used";
    return *fb;
  }
  throw InternalError("no bichromatic path found in a graph exceeding the density bound: " +
                      trace_to_json(trace).dump());
}

}  // namespace

PathExtraction extract_bichromatic_path(const ColoredGraph& cg, int k) {
  const Graph& g = cg.graph;
  if (k < 1) throw std::invalid_argument("extract_bichromatic_path requires k >= 1");
  auto bad = first_improper_edge(g, cg.coloring);
  if (bad.first >= 0)
    throw std::invalid_argument("coloring is not proper: edge {" + std::to_string(bad.first) +
                                "," + std::to_string(bad.second) + "}");
  if (g.edge_count() <= k * g.n)
    throw std::invalid_argument("edge count " + std::to_string(g.edge_count()) +
                                " does not exceed k*n = " + std::to_string(k * g.n));
  PathExtraction out;
  out.witness = extract_impl(g, cg.coloring, k, full_mask(g.n), out.trace, 0);
  if (!validate_path(g, out.witness, 2 * k + 1) ||
      cg.coloring[out.witness.vertices.front()] == cg.coloring[out.witness.vertices.back()])
    throw InternalError("extracted witness failed re-validation");
  return out;
}

// ---------------------------------------------------------------------------
// Tree embedding

bool validate_embedding(const Graph& g, const TreePattern& t, const TreeEmbedding& emb) {
  if ((int)emb.image.size() != t.k + 1) return false;
  Mask used = 0;
  for (int hv : emb.image) {
    if (hv < 0 || hv >= g.n || (used & bit(hv))) return false;
    used |= bit(hv);
  }
  for (auto [a, b] : t.edges)
    if (!g.has_edge(emb.image[a], emb.image[b])) return false;
  return true;
}

TreeEmbedding embed_tree_bichromatic(const ColoredGraph& cg, const TreePattern& t) {
  const Graph& g = cg.graph;
  if (t.leaf_profile != LeafProfile::MixedSides)
    throw std::invalid_argument("tree has all leaves on one side of its 2-coloring");
  auto bad = first_improper_edge(g, cg.coloring);
  if (bad.first >= 0) throw std::invalid_argument("coloring is not proper");
  int k = t.k;
  if (g.edge_count() <= (k - 1) * g.n)
    throw std::invalid_argument("edge count " + std::to_string(g.edge_count()) +
                                " does not exceed (k-1)*n = " + std::to_string((k - 1) * g.n));

  // subgraph with minimum degree >= k; keeps the edge surplus
  Mask core = k_core_mask(g, k, full_mask(g.n));
  if (!core) throw InternalError("k-core emptied a graph above (k-1)n edges");

  PathWitness opath = odd_leaf_path(t);
  int lam = (opath.length() - 1) / 2;
  PathWitness host;
  if (lam == 0) {
    // the odd path is a single edge; any core edge is bichromatic
    for (int u : bits(core)) {
      Mask nb = g.adj[u] & core & ~full_mask(u + 1);
      if (nb) {
        host.vertices = {u, lowest_bit(nb)};
        break;
      }
    }
    if (host.vertices.empty()) throw InternalError("core has no edges");
  } else {
    ExtractionTrace scratch;
    host = extract_impl(g, cg.coloring, lam, core, scratch, 0);
  }

  TreeEmbedding emb;
  emb.image.assign(k + 1, -1);
  Mask used = 0;
  for (int j = 0; j <= opath.length(); ++j) {
    emb.image[opath.vertices[j]] = host.vertices[j];
    used |= bit(host.vertices[j]);
  }
  // grow the rest of the tree outward from the embedded path; with minimum
  // degree >= k and only k+1 vertices to place this never gets stuck
  std::queue<int> q;
  for (int tv : opath.vertices) q.push(tv);
  while (!q.empty()) {
    int tv = q.front();
    q.pop();
    for (int tw : bits(t.graph.adj[tv])) {
      if (emb.image[tw] >= 0) continue;
      Mask cands = g.adj[emb.image[tv]] & core & ~used;
      if (!cands) throw InternalError("greedy tree extension ran out of candidates");
      int hv = lowest_bit(cands);
      emb.image[tw] = hv;
      used |= bit(hv);
      q.push(tw);
    }
  }
  if (!validate_embedding(g, t, emb)) throw InternalError("tree embedding failed re-validation");
  bool two_colors = false;
  int c0 = cg.coloring[emb.image[lowest_bit(t.leaves)]];
  for (int tv : bits(t.leaves))
    if (cg.coloring[emb.image[tv]] != c0) two_colors = true;
  if (!two_colors) throw InternalError("tree embedding has monochromatic leaves");
  return emb;
}

// ---------------------------------------------------------------------------
// Double stars

namespace {

int count_leaf_colors(const Coloring& c, const DoubleStarWitness& w) {
  std::set<int> cols;
  for (int x : w.a_leaves) cols.insert(c[x]);
  for (int x : w.b_leaves) cols.insert(c[x]);
  return (int)cols.size();
}

std::optional<DoubleStarWitness> exhaustive_bichromatic_star(const Graph& h, const Coloring& c,
                                                             int a, int b, Mask active) {
  for (int u : bits(active)) {
    for (int v : bits(h.adj[u] & active)) {
      Mask nu = h.adj[u] & active & ~bit(v);
      Mask nv = h.adj[v] & active & ~bit(u);
      if (popcount(nu) < a || popcount(nv) < b) continue;
      std::vector<int> pool_a;
      for (int w : bits(nu)) pool_a.push_back(w);
      std::vector<int> A;
      std::optional<DoubleStarWitness> found;
      auto pick_a = [&](auto&& self, size_t i) -> bool {
        if ((int)A.size() == a) {
          Mask am = 0;
          for (int w : A) am |= bit(w);
          std::vector<int> pool_b;
          for (int w : bits(nv & ~am)) pool_b.push_back(w);
          if ((int)pool_b.size() < b) return false;
          std::vector<int> B;
          auto pick_b = [&](auto&& self2, size_t j) -> bool {
            if ((int)B.size() == b) {
              DoubleStarWitness w{u, v, A, B};
              if (count_leaf_colors(c, w) >= 2) {
                found = std::move(w);
                return true;
              }
              return false;
            }
            for (size_t t = j; t < pool_b.size(); ++t) {
              B.push_back(pool_b[t]);
              if (self2(self2, t + 1)) return true;
              B.pop_back();
            }
            return false;
          };
          return pick_b(pick_b, 0);
        }
        for (size_t t = i; t < pool_a.size(); ++t) {
          A.push_back(pool_a[t]);
          if (self(self, t + 1)) return true;
          A.pop_back();
        }
        return false;
      };
      if (pick_a(pick_a, 0)) return found;
    }
  }
  return std::nullopt;
}

}  // namespace

DoubleStarExtraction find_double_star_bichromatic(const ColoredGraph& cg, int a_in, int b_in) {
  const Graph& g = cg.graph;
  const Coloring& c = cg.coloring;
  if (a_in < 1 || b_in < 1) throw std::invalid_argument("double star needs a, b >= 1");
  int a = std::min(a_in, b_in), b = std::max(a_in, b_in);
  auto bad = first_improper_edge(g, c);
  if (bad.first >= 0) throw std::invalid_argument("coloring is not proper");
  if (2 * g.edge_count() <= (a + b) * g.n)
    throw std::invalid_argument("edge count " + std::to_string(g.edge_count()) +
                                " does not exceed (a+b)/2 * n");

  // reduce to minimum degree > (a+b)/2; the surplus over (a+b)/2 * n survives
  Mask active = full_mask(g.n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : bits(active))
      if (2 * popcount(g.adj[v] & active) <= a + b) {
        active &= ~bit(v);
        changed = true;
        break;
      }
  }
  if (!active) throw InternalError("degree reduction emptied an over-dense graph");
  Graph h = induced(g, active);

  auto copy = find_double_star(h, a, b, active);
  if (!copy)
    throw InternalError("no double star in a graph with minimum degree above (a+b)/2");
  if (count_leaf_colors(c, *copy) >= 2) return {*copy, "direct", false};

  int u = copy->u, v = copy->v;
  Mask b_mask = 0;
  for (int x : copy->b_leaves) b_mask |= bit(x);

  // pivot 1: some b-leaf w is not adjacent to u.  Re-center on {v,w}: the old
  // leaves keep the monochromatic color, w's neighbors cannot carry it.
  for (int w : copy->b_leaves) {
    if (h.has_edge(u, w)) continue;
    std::vector<int> new_b{u};
    for (int x : copy->b_leaves)
      if (x != w) new_b.push_back(x);
    std::sort(new_b.begin(), new_b.end());
    Mask excl = bit(u) | bit(v) | bit(w) | (b_mask & ~bit(w));
    Mask cands = h.adj[w] & active & ~excl;
    if (popcount(cands) < a) continue;
    std::vector<int> new_a;
    for (int x : bits(cands)) {
      if ((int)new_a.size() == a) break;
      new_a.push_back(x);
    }
    DoubleStarWitness piv{w, v, new_a, new_b};
    if (!validate_double_star(h, piv, a, b))
      throw InternalError("double-star pivot produced an invalid copy");
    if (count_leaf_colors(c, piv) >= 2) return {piv, "pivot-nonadjacent", false};
    // only possible when b = 1 (the remaining old leaves vanish); fall through
    break;
  }

  // pivot 2: u dominates B.  Re-center on {u,x} for the least x in B.
  {
    int x = copy->b_leaves.front();
    int y = copy->a_leaves.front();
    if (h.has_edge(u, x)) {
      std::vector<int> new_b{y};
      for (int t : copy->b_leaves)
        if (t != x) new_b.push_back(t);
      std::sort(new_b.begin(), new_b.end());
      Mask bmask2 = 0;
      for (int t : new_b) bmask2 |= bit(t);
      Mask cands = h.adj[x] & active & ~(bit(u) | bit(x) | bmask2);
      if (popcount(cands) >= a) {
        std::vector<int> new_a;
        for (int t : bits(cands)) {
          if ((int)new_a.size() == a) break;
          new_a.push_back(t);
        }
        DoubleStarWitness piv{x, u, new_a, new_b};
        if (!validate_double_star(h, piv, a, b))
          throw InternalError("double-star pivot produced an invalid copy");
        if (count_leaf_colors(c, piv) >= 2) return {piv, "pivot-dominating", false};
      }
    }
  }

  // b = 1 corner: the pivots can come back monochromatic; scan all copies
  auto fb = exhaustive_bichromatic_star(h, c, a, b, active);
  if (!fb) throw InternalError("no bichromatic double star in an over-dense graph");
  return {*fb, "exhaustive", true};
}

// ---------------------------------------------------------------------------
// Trace serialization and replay

nlohmann::ordered_json trace_to_json(const ExtractionTrace& t) {
  auto levels = nlohmann::ordered_json::array();
  for (const auto& lv : t.levels) {
    nlohmann::ordered_json j;
    auto rem = nlohmann::ordered_json::array();
    for (auto [v, d] : lv.removed) rem.push_back({v, d});
    j["removed"] = rem;
    j["component"] = lv.component;
    j["cycle"] = lv.cycle;
    j["case"] = lv.case_label;
    auto outs = nlohmann::ordered_json::array();
    for (const auto& [cv, offs] : lv.outgoing) {
      nlohmann::ordered_json o;
      o["vertex"] = cv;
      o["off_cycle"] = offs;
      outs.push_back(o);
    }
    j["outgoing"] = outs;
    j["chain_links"] = lv.chain_links;
    if (lv.chain_edge.first >= 0) j["chain_edge"] = {lv.chain_edge.first, lv.chain_edge.second};
    if (lv.deleted_pair.first >= 0)
      j["deleted_pair"] = {lv.deleted_pair.first, lv.deleted_pair.second};
    j["fallback"] = lv.fallback;
    if (!lv.note.empty()) j["note"] = lv.note;
    levels.push_back(j);
  }
  nlohmann::ordered_json out;
  out["levels"] = levels;
  return out;
}

bool replay_extraction_trace(const Graph& g, int k, const ExtractionTrace& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (t.levels.empty()) return fail("trace has no levels");
  if ((int)t.levels.size() > g.n) return fail("more levels than vertices");
  Mask active = full_mask(g.n);
  int L = 2 * k + 1;
  for (size_t li = 0; li < t.levels.size(); ++li) {
    const auto& lv = t.levels[li];
    for (auto [v, d] : lv.removed) {
      if (v < 0 || v >= g.n || !(active & bit(v))) return fail("removal of inactive vertex");
      if (popcount(g.adj[v] & active) != d) return fail("recorded removal degree mismatch");
      if (d >= k) return fail("removed vertex was not below the degree threshold");
      active &= ~bit(v);
    }
    for (int v : bits(active))
      if (popcount(g.adj[v] & active) < k) return fail("core still has a low-degree vertex");
    Mask comp = 0;
    for (int v : lv.component) {
      if (v < 0 || v >= g.n) return fail("component vertex out of range");
      comp |= bit(v);
    }
    auto comps = connected_components(g, active);
    if (std::find(comps.begin(), comps.end(), comp) == comps.end())
      return fail("recorded set is not a connected component");
    if (edge_count(g, comp) <= k * popcount(comp)) return fail("component not above density bound");
    if (lv.cycle.empty()) return fail("level has no cycle");
    CycleWitness cyc{lv.cycle};
    if (!validate_cycle(g, cyc, L)) return fail("recorded cycle invalid");
    for (int v : lv.cycle)
      if (!(comp & bit(v))) return fail("cycle leaves the component");
    auto smallest = smallest_long_cycle(g, L, comp);
    if (!smallest || smallest->length() != cyc.length())
      return fail("recorded cycle is not of minimum admissible length");
    int ell = cyc.length();
    std::string want = ell == L ? "l=2k+1" : ell == L + 1 ? "l=2k+2" : ell == L + 2 ? "l=2k+3" : "l>=2k+4";
    if (lv.case_label != want) return fail("case label does not match cycle length");
    Mask cyc_mask = 0;
    for (int v : lv.cycle) cyc_mask |= bit(v);
    for (const auto& [cv, offs] : lv.outgoing) {
      if (!(cyc_mask & bit(cv))) return fail("outgoing vertex not on cycle");
      Mask expected = g.adj[cv] & comp & ~cyc_mask;
      Mask got = 0;
      for (int u : offs) got |= bit(u);
      if (expected != got) return fail("outgoing map disagrees with adjacency");
    }
    bool last = li + 1 == t.levels.size();
    if (lv.deleted_pair.first >= 0) {
      if (last) return fail("deletion level must recurse");
      auto [x, y] = lv.deleted_pair;
      if (!(cyc_mask & bit(x)) || !(cyc_mask & bit(y)) || !g.has_edge(x, y))
        return fail("deleted pair not a cycle edge");
      if (!(g.adj[x] & comp & ~cyc_mask) || !(g.adj[y] & comp & ~cyc_mask))
        return fail("deleted pair not outgoing");
      int e_comp = edge_count(g, comp), n_comp = popcount(comp);
      int du = popcount(g.adj[x] & comp), dv = popcount(g.adj[y] & comp);
      if (e_comp - (du + dv - 1) <= k * (n_comp - 2))
        return fail("deletion violates the density bookkeeping");
      active = comp & ~bit(x) & ~bit(y);
    } else {
      if (!last) return fail("only deletion levels may recurse");
      if (lv.chain_edge.first >= 0) {
        auto [x, y] = lv.chain_edge;
        if (!g.has_edge(x, y)) return fail("chain extremes not adjacent");
        if (lv.chain_links < 1) return fail("chain recorded without links");
      }
    }
  }
  return true;
}

}  // namespace chroma
