#pragma once

// Minimal primes P_T(G) of a binomial edge ideal, encoded by their cut sets.
// T yields a minimal prime iff every v in T is a cut vertex of the graph
// induced on (V \ T) | {v}; equivalently removing v from T strictly drops
// the component count. Only non-simplicial vertices can occur in such a T.

#include <vector>

#include "bei/chordal.hpp"
#include "bei/graph.hpp"

namespace bei {

struct MinimalPrime {
  Mask T = 0;
  std::vector<Mask> comps;  // components of G - T
  int dim = 0;              // Krull dimension of S/P_T = (n - |T|) + #comps
};

inline bool has_cut_point_property(const Graph& g, Mask T) {
  Mask rest = g.vmask() & ~T;
  int base = component_count(g, rest);
  for (int v : bits(T))
    if (component_count(g, rest | bit(v)) >= base) return false;
  return true;
}

inline std::vector<MinimalPrime> minimal_primes(const Graph& g) {
  require(g.n <= 20, "minimal_primes: n <= 20");
  Mask candidates = g.vmask() & ~free_vertices(g);
  std::vector<int> cand;
  for (int v : bits(candidates)) cand.push_back(v);
  std::vector<MinimalPrime> out;
  for (Mask sub = 0;; ++sub) {
    Mask T = 0;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if ((sub >> i) & 1) T |= bit(cand[i]);
    if (has_cut_point_property(g, T)) {
      MinimalPrime p;
      p.T = T;
      p.comps = components(g, g.vmask() & ~T);
      p.dim = (g.n - bit_count(T)) + (int)p.comps.size();
      out.push_back(p);
    }
    if (sub + 1 >= (Mask{1} << cand.size())) break;
  }
  std::sort(out.begin(), out.end(), [](const MinimalPrime& a, const MinimalPrime& b) {
    if (bit_count(a.T) != bit_count(b.T)) return bit_count(a.T) < bit_count(b.T);
    return a.T < b.T;
  });
  return out;
}

inline int krull_dimension(const Graph& g) {
  int d = 0;
  for (const auto& p : minimal_primes(g)) d = std::max(d, p.dim);
  return d;
}

}  // namespace bei
