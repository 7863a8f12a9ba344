#pragma once

// Simple graphs on at most 64 vertices, adjacency kept as one 64-bit row per
// vertex. Vertices are 0-based everywhere in the API; text formats (edge
// lists, certificates, JSON) use 1-based labels, shifted at the I/O boundary.

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bei {

using Mask = std::uint64_t;

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline int bit_count(Mask m) { return std::popcount(m); }
inline int first_bit(Mask m) {
  assert(m != 0);
  return std::countr_zero(m);
}
inline Mask bit(int v) { return Mask{1} << v; }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// for (int v : bits(mask)) — ascending order.
struct BitRange {
  Mask m;
  struct It {
    Mask m;
    int operator*() const { return std::countr_zero(m); }
    It& operator++() { m &= m - 1; return *this; }
    bool operator!=(const It& o) const { return m != o.m; }
  };
  It begin() const { return {m}; }
  It end() const { return {0}; }
};
inline BitRange bits(Mask m) { return {m}; }

struct Graph {
  int n = 0;
  std::vector<Mask> adj;  // adj[v] = neighbor mask, bit v never set

  Mask vmask() const { return low_mask(n); }
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
  Mask neighbors(int v) const { return adj[v]; }
  Mask closed_neighbors(int v) const { return adj[v] | bit(v); }
  int degree(int v) const { return bit_count(adj[v]); }

  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }

  // sorted, u < v
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v : bits(adj[u] & ~low_mask(u + 1))) e.emplace_back(u, v);
    return e;
  }

  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  require(n >= 1 && n <= 64, "graph: need 1 <= n <= 64");
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, "graph: vertex out of range");
    require(u != v, "graph: loops not allowed");
    g.adj[u] |= bit(v);
    g.adj[v] |= bit(u);
  }
  return g;
}

// --- components on an induced vertex set (no relabeling) ---

inline Mask component_of(const Graph& g, Mask sub, int start) {
  assert(sub & bit(start));
  Mask comp = bit(start), frontier = bit(start);
  while (frontier) {
    Mask next = 0;
    for (int v : bits(frontier)) next |= g.adj[v] & sub & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

inline std::vector<Mask> components(const Graph& g, Mask sub) {
  std::vector<Mask> out;
  Mask left = sub;
  while (left) {
    Mask c = component_of(g, left, first_bit(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline int component_count(const Graph& g, Mask sub) {
  int k = 0;
  Mask left = sub;
  while (left) {
    left &= ~component_of(g, left, first_bit(left));
    ++k;
  }
  return k;
}

inline bool is_connected(const Graph& g) {
  return g.n == 0 || component_count(g, g.vmask()) == 1;
}

// --- derived graphs ---

// Induced subgraph on `keep`; vertices relabeled 0..k-1 preserving order.
inline Graph induced_subgraph(const Graph& g, Mask keep) {
  keep &= g.vmask();
  std::array<int, 64> newid{};
  int k = 0;
  for (int v : bits(keep)) newid[v] = k++;
  Graph h;
  h.n = k;
  h.adj.assign(std::max(k, 1), 0);
  h.adj.resize(k);
  for (int v : bits(keep))
    for (int u : bits(g.adj[v] & keep)) h.adj[newid[v]] |= bit(newid[u]);
  return h;
}

inline Graph delete_vertices(const Graph& g, Mask s) {
  require((s & g.vmask()) != g.vmask(), "delete_vertices: would remove all vertices");
  return induced_subgraph(g, g.vmask() & ~s);
}

inline Graph delete_vertex(const Graph& g, int v) {
  return delete_vertices(g, bit(v));
}

// G_v: complete the open neighborhood of v into a clique.
inline Graph neighborhood_saturation(const Graph& g, int v) {
  require(v >= 0 && v < g.n, "saturation: vertex out of range");
  Graph h = g;
  Mask nb = g.adj[v];
  for (int u : bits(nb)) h.adj[u] |= nb & ~bit(u);
  return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  require(a.n + b.n <= 64, "union: too many vertices");
  Graph g;
  g.n = a.n + b.n;
  g.adj.assign(g.n, 0);
  for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
  for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = b.adj[v] << a.n;
  return g;
}

// Join: disjoint union plus every edge between the two parts.
inline Graph graph_join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  Mask ma = low_mask(a.n), mb = g.vmask() & ~ma;
  for (int v : bits(ma)) g.adj[v] |= mb;
  for (int v : bits(mb)) g.adj[v] |= ma;
  return g;
}

// perm[old] = new
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  require((int)perm.size() == g.n, "relabel: permutation size mismatch");
  std::vector<bool> seen(g.n, false);
  for (int p : perm) {
    require(p >= 0 && p < g.n && !seen[p], "relabel: not a permutation");
    seen[p] = true;
  }
  Graph h;
  h.n = g.n;
  h.adj.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : bits(g.adj[v])) h.adj[perm[v]] |= bit(perm[u]);
  return h;
}

// --- families ---

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
  require(n >= 3, "cycle: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

inline Graph empty_graph(int n) { return build_graph(n, {}); }

// Center 0, leaves 1..leaves.
inline Graph star_graph(int leaves) {
  require(leaves >= 1, "star: need >= 1 leaf");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

// t triangles sharing the center vertex 2t; pairs (0,1), (2,3), ...
inline Graph friendship_graph(int t) {
  require(t >= 1, "friendship: need t >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < t; ++i) {
    e.emplace_back(2 * i, 2 * i + 1);
    e.emplace_back(2 * i, 2 * t);
    e.emplace_back(2 * i + 1, 2 * t);
  }
  return build_graph(2 * t + 1, e);
}

// Spine path 0..spine-1, legs[i] pendant leaves attached to spine vertex i.
inline Graph caterpillar_graph(int spine, const std::vector<int>& legs) {
  require(spine >= 1, "caterpillar: need spine >= 1");
  require((int)legs.size() == spine, "caterpillar: legs size != spine");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i)
    for (int k = 0; k < legs[i]; ++k) e.emplace_back(i, next++);
  return build_graph(next, e);
}

// Star with center 0 subdivided: arms of the given lengths (spider tree).
inline Graph spider_graph(const std::vector<int>& arms) {
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int len : arms) {
    require(len >= 1, "spider: arm length >= 1");
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_graph(next, e);
}

inline bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.n - 1;
}

// Tree with a spine path such that all vertices are within distance 1 of it.
inline bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  // Removing all leaves must leave a path (or nothing).
  Mask leaves = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) <= 1) leaves |= bit(v);
  Mask rest = g.vmask() & ~leaves;
  if (!rest) return true;
  if (component_count(g, rest) != 1) return false;
  for (int v : bits(rest))
    if (bit_count(g.adj[v] & rest) > 2) return false;
  return true;
}

// --- canonical form (tiny n only) ---

// Minimum over all vertex permutations of the upper-triangle bit string.
inline std::uint64_t canonical_key(const Graph& g) {
  require(g.n <= 8, "canonical_key: n <= 8 only");
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    int pos = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j, ++pos)
        if (g.adjacent(perm[i], perm[j])) key |= std::uint64_t{1} << pos;
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// --- text formats ---

// Edge list: first line n, then one "u v" per line, labels 1..n.
inline Graph parse_edge_list(std::istream& in) {
  int n;
  require(static_cast<bool>(in >> n), "edge list: missing vertex count");
  std::vector<std::pair<int, int>> e;
  int u, v;
  while (in >> u >> v) e.emplace_back(u - 1, v - 1);
  return build_graph(n, e);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

// graph6 (undirected): short form for n <= 62, long form 126-prefixed.
inline Graph parse_graph6(std::string s) {
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  require(!s.empty(), "graph6: empty");
  std::size_t pos = 0;
  auto next6 = [&]() -> int {
    require(pos < s.size(), "graph6: truncated");
    int c = static_cast<unsigned char>(s[pos++]);
    require(c >= 63 && c <= 126, "graph6: bad byte");
    return c - 63;
  };
  long long n;
  int c0 = next6();
  if (c0 < 63) {
    n = c0;
  } else {  // 126 prefix
    long long a = next6(), b = next6(), c = next6();
    require(!(a == 63), "graph6: n >= 2^18 unsupported");
    n = (a << 12) | (b << 6) | c;
  }
  require(n >= 1 && n <= 64, "graph6: n out of supported range 1..64");
  std::vector<std::pair<int, int>> e;
  int have = 0, cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        cur = next6();
        have = 6;
      }
      --have;
      if ((cur >> have) & 1) e.emplace_back(i, j);
    }
  return build_graph(static_cast<int>(n), e);
}

inline std::string write_graph6(const Graph& g) {
  require(g.n <= 62, "graph6 writer: n <= 62");
  std::string s(1, static_cast<char>(g.n + 63));
  int have = 0, cur = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++have == 6) {
        s.push_back(static_cast<char>(cur + 63));
        have = 0;
        cur = 0;
      }
    }
  if (have > 0) s.push_back(static_cast<char>((cur << (6 - have)) + 63));
  return s;
}

// Sniff: a leading integer means edge list, anything else graph6.
inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  require(static_cast<bool>(in >> first), "graph input: empty");
  bool numeric = !first.empty() &&
                 std::all_of(first.begin(), first.end(),
                             [](char c) { return c >= '0' && c <= '9'; });
  std::istringstream again(text);
  if (numeric) return parse_edge_list(again);
  return parse_graph6(first);
}

}  // namespace bei
