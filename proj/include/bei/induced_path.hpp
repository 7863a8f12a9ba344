#pragma once

// Longest induced path. L(G) is its edge length. Exact branch-and-bound DFS;
// starts and extensions are explored in ascending vertex order, so the first
// path attaining the optimum is the lexicographically least certificate.

#include <vector>

#include "bei/graph.hpp"

namespace bei {

struct InducedPath {
  int length = 0;             // edges
  std::vector<int> vertices;  // length+1 vertices
};

// L(G) sums over connected components; one witness path per component.
struct InducedPathCertificate {
  int total = 0;
  std::vector<std::vector<int>> paths;
};

inline bool is_induced_path(const Graph& g, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  Mask seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= g.n || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
  return true;
}

namespace detail {

struct PathSearch {
  const Graph& g;
  std::vector<int> cur, best;

  explicit PathSearch(const Graph& g) : g(g) {}

  // banned: vertices adjacent to (or part of) the path up to cur.back()'s
  // predecessor; extensions must avoid them to stay induced.
  void extend(int last, Mask banned) {
    if ((int)cur.size() > (int)best.size()) best = cur;
    Mask cand = g.adj[last] & ~banned;
    if (!cand) return;
    // future vertices live in last's component of the non-banned graph
    Mask room = component_of(g, (g.vmask() & ~banned) | bit(last), last);
    if ((int)cur.size() + bit_count(room) - 1 <= (int)best.size()) return;
    for (int u : bits(cand)) {
      cur.push_back(u);
      extend(u, banned | g.closed_neighbors(last));
      cur.pop_back();
    }
  }
};

}  // namespace detail

inline InducedPath longest_induced_path(const Graph& g) {
  require(g.n <= 20, "longest_induced_path: n <= 20");
  require(is_connected(g), "longest_induced_path: graph must be connected");
  detail::PathSearch s(g);
  for (int v = 0; v < g.n; ++v) {
    s.cur = {v};
    s.extend(v, bit(v));
  }
  InducedPath out;
  out.vertices = s.best;
  out.length = (int)s.best.size() - 1;
  assert(is_induced_path(g, out.vertices));
  return out;
}

inline InducedPathCertificate longest_induced_path_length(const Graph& g) {
  InducedPathCertificate cert;
  for (Mask comp : components(g, g.vmask())) {
    std::vector<int> labels;
    for (int v : bits(comp)) labels.push_back(v);
    InducedPath p = longest_induced_path(induced_subgraph(g, comp));
    std::vector<int> mapped;
    for (int v : p.vertices) mapped.push_back(labels[v]);
    assert(is_induced_path(g, mapped));
    cert.paths.push_back(std::move(mapped));
    cert.total += p.length;
  }
  return cert;
}

inline int induced_path_length(const Graph& g) {
  return longest_induced_path_length(g).total;
}

}  // namespace bei
