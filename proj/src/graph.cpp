#include "chroma/graph.hpp"

#include <cstdlib>
#include <sstream>

namespace chroma {

int soft_max_n(int default_limit) {
  static int override_n = [] {
    const char* env = std::getenv("CHROMA_MAX_N");
    if (!env) return -1;
    int v = std::atoi(env);
    if (v <= 0) return -1;
    std::fprintf(stderr,
                 "chroma: warning: CHROMA_MAX_N=%d overrides built-in size "
                 "guards; expect long runtimes and untested territory\n",
                 v);
    return v > kMaxVertices ? kMaxVertices : v;
  }();
  if (override_n < 0) return default_limit;
  return override_n > default_limit ? override_n : default_limit;
}

Graph::Graph(int n_) : n(n_) {
  if (n_ < 0 || n_ > kMaxVertices)
    throw SizeError("vertex count " + std::to_string(n_) + " outside supported range 0.." +
                    std::to_string(kMaxVertices));
  adj.assign(n_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops not supported");
  adj[u] |= bit(v);
  adj[v] |= bit(u);
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += popcount(adj[v]);
  return total / 2;
}

bool is_proper(const Graph& g, const Coloring& c) {
  return first_improper_edge(g, c) == std::pair<int, int>{-1, -1};
}

std::pair<int, int> first_improper_edge(const Graph& g, const Coloring& c) {
  if ((int)c.size() != g.n)
    throw std::invalid_argument("coloring length " + std::to_string(c.size()) +
                                " does not match vertex count " + std::to_string(g.n));
  for (int u = 0; u < g.n; ++u)
    for (int v : bits(g.adj[u] & ~full_mask(u + 1)))
      if (c[u] == c[v]) return {u, v};
  return {-1, -1};
}

ColoredGraph make_colored_graph(Graph g, Coloring c) {
  for (int x : c)
    if (x < 0) throw std::invalid_argument("colors must be non-negative");
  auto bad = first_improper_edge(g, c);
  if (bad.first >= 0)
    throw std::invalid_argument("coloring is not proper: edge {" + std::to_string(bad.first) +
                                "," + std::to_string(bad.second) + "} is monochromatic");
  return ColoredGraph{std::move(g), std::move(c)};
}

Coloring greedy_coloring(const Graph& g) {
  Coloring c(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    Mask used = 0;
    for (int w : bits(g.adj[v] & full_mask(v)))
      if (c[w] < 32) used |= bit(c[w]);
    int col = 0;
    while ((used >> col) & 1) ++col;
    c[v] = col;
  }
  return c;
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(const std::string& s) {
  if (s.empty()) throw ParseError("empty graph6 string", 0);
  unsigned char c0 = (unsigned char)s[0];
  if (c0 == 126) throw ParseError("multi-byte vertex count not supported", 0);
  if (c0 < 63 || c0 > 125) throw ParseError("malformed length byte", 0);
  int n = c0 - 63;
  if (n > kMaxVertices)
    throw ParseError("vertex count " + std::to_string(n) + " exceeds supported maximum " +
                     std::to_string(kMaxVertices), 0);
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if ((int)s.size() < 1 + nbytes) throw ParseError("truncated graph6 data", s.size());
  if ((int)s.size() > 1 + nbytes) throw ParseError("trailing garbage", 1 + nbytes);
  for (int t = 0; t < nbytes; ++t) {
    unsigned char c = (unsigned char)s[1 + t];
    if (c < 63 || c > 126) throw ParseError("invalid data byte", 1 + t);
  }
  Graph g(n);
  int b = 0;
  // Upper triangle in column-major order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b) {
      int v = (unsigned char)s[1 + b / 6] - 63;
      if ((v >> (5 - b % 6)) & 1) g.add_edge(i, j);
    }
  for (; b < nbytes * 6; ++b) {
    int v = (unsigned char)s[1 + b / 6] - 63;
    if ((v >> (5 - b % 6)) & 1) throw ParseError("nonzero padding bits", 1 + b / 6);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int nbits = g.n * (g.n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  std::string out;
  out.reserve(1 + nbytes);
  out.push_back((char)(g.n + 63));
  std::vector<int> data(nbytes, 0);
  int b = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if (g.has_edge(i, j)) data[b / 6] |= 1 << (5 - b % 6);
  for (int v : data) out.push_back((char)(v + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plain-text formats

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header \"n m\"");
  if (n < 0 || n > kMaxVertices)
    throw SizeError("edge list: vertex count " + std::to_string(n) + " unsupported");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: endpoint out of range in edge " +
                                  std::to_string(i));
    if (u == v) throw std::invalid_argument("edge list: self-loop in edge " + std::to_string(i));
    if (g.has_edge(u, v))
      throw std::invalid_argument("edge list: duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    g.add_edge(u, v);
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing tokens after last edge");
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.n; ++u)
    for (int v : bits(g.adj[u] & ~full_mask(u + 1))) out << u << ' ' << v << '\n';
  return out.str();
}

Coloring parse_coloring(const std::string& text, int n) {
  std::istringstream in(text);
  Coloring c;
  int x;
  while (in >> x) {
    if (x < 0) throw std::invalid_argument("coloring: colors must be non-negative");
    c.push_back(x);
  }
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string tok;
    in >> tok;
    throw std::invalid_argument("coloring: unexpected token \"" + tok + "\"");
  }
  if ((int)c.size() != n)
    throw std::invalid_argument("coloring: expected " + std::to_string(n) + " colors, got " +
                                std::to_string(c.size()));
  return c;
}

// ---------------------------------------------------------------------------
// Reductions

Mask k_core_mask(const Graph& g, int k, Mask active, RemovalTrace* trace) {
  if (k < 1) throw std::invalid_argument("k_core requires k >= 1");
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : bits(active)) {
      int d = popcount(g.adj[v] & active);
      if (d < k) {
        if (trace) trace->removed.emplace_back(v, d);
        active &= ~bit(v);
        changed = true;
        break;  // restart from the lowest index
      }
    }
  }
  return active;
}

std::pair<Graph, RemovalTrace> k_core(const Graph& g, int k) {
  RemovalTrace trace;
  Mask core = k_core_mask(g, k, full_mask(g.n), &trace);
  return {compact(g, core), std::move(trace)};
}

std::vector<Mask> connected_components(const Graph& g, Mask active) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int v : bits(active)) {
    if (seen & bit(v)) continue;
    Mask comp = bit(v), frontier = bit(v);
    while (frontier) {
      Mask next = 0;
      for (int u : bits(frontier)) next |= g.adj[u] & active & ~comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<Mask> connected_components(const Graph& g) {
  return connected_components(g, full_mask(g.n));
}

Graph induced(const Graph& g, Mask keep) {
  Graph h(g.n);
  for (int v : bits(keep)) h.adj[v] = g.adj[v] & keep;
  return h;
}

Graph compact(const Graph& g, Mask keep, std::vector<int>* old_ids) {
  std::vector<int> ids;
  for (int v : bits(keep)) ids.push_back(v);
  Graph h((int)ids.size());
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j)
      if (g.has_edge(ids[i], ids[j])) h.add_edge(i, j);
  if (old_ids) *old_ids = std::move(ids);
  return h;
}

int edge_count(const Graph& g, Mask active) {
  int total = 0;
  for (int v : bits(active)) total += popcount(g.adj[v] & active);
  return total / 2;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : bits(g.adj[u] & ~full_mask(u + 1))) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace chroma
