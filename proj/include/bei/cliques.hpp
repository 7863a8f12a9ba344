#pragma once

// Maximal clique enumeration. c(G) below always means the number of maximal
// cliques. Two independent routes: Bron-Kerbosch with pivoting (any graph)
// and the perfect-elimination-order route (chordal graphs only); tests hold
// them against each other.

#include <vector>

#include "bei/chordal.hpp"
#include "bei/graph.hpp"

namespace bei {

namespace detail {
inline void bron_kerbosch(const Graph& g, Mask r, Mask p, Mask x,
                          std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  // pivot: maximize |P & N(u)| over u in P|X
  int pivot = -1, best = -1;
  for (int u : bits(p | x)) {
    int s = bit_count(p & g.adj[u]);
    if (s > best) {
      best = s;
      pivot = u;
    }
  }
  for (int v : bits(p & ~g.adj[pivot])) {
    bron_kerbosch(g, r | bit(v), p & g.adj[v], x & g.adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}
}  // namespace detail

inline std::vector<Mask> maximal_cliques(const Graph& g) {
  std::vector<Mask> out;
  detail::bron_kerbosch(g, 0, g.vmask(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Chordal-only: every maximal clique is {v} | later-neighbors for some v of
// a PEO; drop candidates contained in another.
inline std::vector<Mask> maximal_cliques_chordal(const Graph& g) {
  auto chk = check_chordal(g);
  require(chk.chordal, "maximal_cliques_chordal: graph not chordal");
  std::vector<Mask> cand;
  Mask later = g.vmask();
  for (int v : chk.peo) {
    later &= ~bit(v);
    cand.push_back(bit(v) | (g.adj[v] & later));
  }
  std::vector<Mask> out;
  for (Mask c : cand) {
    bool dominated = false;
    for (Mask d : cand)
      if (c != d && (c & d) == c) dominated = true;
    // equal masks can't occur: each candidate has a distinct minimum element
    if (!dominated) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// c(G): number of maximal cliques.
inline int clique_count(const Graph& g) {
  return (int)maximal_cliques(g).size();
}

inline int clique_number(const Graph& g) {
  int w = 0;
  for (Mask c : maximal_cliques(g)) w = std::max(w, bit_count(c));
  return w;
}

}  // namespace bei
