#pragma once

// Lex Groebner machinery for the edge-binomial ideal of a graph, in
// K[x_1..x_n, y_1..y_n] with x_1 > ... > x_n > y_1 > ... > y_n.
//
// Two independent routes, held against each other in tests:
//  * combinatorial generating set from connecting paths whose interior
//    vertices all sort outside [i, j] (minimal interior supports);
//  * a from-scratch Buchberger oracle on exponent vectors (small n only).
//
// Every polynomial in sight is a pure difference of monic monomials, so the
// computation is coefficient-free and independent of the base field.

#include <array>
#include <functional>
#include <set>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// --- squarefree monomials as bit masks: x_i -> bit i, y_j -> bit n+j ---

struct SqIdeal {
  int nvars = 0;
  std::vector<Mask> gens;  // minimal generators, sorted
};

inline std::vector<Mask> minimalize_masks(std::vector<Mask> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mask> out;
  for (Mask m : gens) {
    bool redundant = false;
    for (Mask d : out)
      if ((d & m) == d) { redundant = true; break; }  // d divides m
    if (!redundant) out.push_back(m);
  }
  // supersets can only appear after subsets when sorted by value? Not true in
  // general, so sweep once more the other way.
  for (std::size_t i = 0; i < out.size();) {
    bool redundant = false;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (k != i && (out[k] & out[i]) == out[k]) { redundant = true; break; }
    if (redundant) out.erase(out.begin() + i);
    else ++i;
  }
  return out;
}

// --- admissible connecting supports ---

// Minimal interior sets M inside `pool` making i and j connected in the
// induced graph on {i,j} | M. Every i-j path in that induced graph then uses
// all of M, and all arrangements share one binomial.
inline std::vector<Mask> minimal_connectors(const Graph& g, int i, int j, Mask pool) {
  std::vector<Mask> found;
  auto dominated = [&](Mask u) {
    for (Mask f : found)
      if ((f & u) == f) return true;  // any completion stays a superset
    return false;
  };
  std::function<void(int, Mask)> walk = [&](int v, Mask used) {
    for (int w : bits(g.adj[v])) {
      if (w == j) {
        if (!dominated(used)) found.push_back(used);
        continue;
      }
      if (!(pool & bit(w)) || (used & bit(w))) continue;
      if (dominated(used | bit(w))) continue;
      walk(w, used | bit(w));
    }
  };
  walk(i, 0);
  return minimalize_masks(found);
}

struct SqBinomial {
  Mask lead = 0, trail = 0;  // lead > trail in lex
  bool operator==(const SqBinomial& o) const {
    return lead == o.lead && trail == o.trail;
  }
  bool operator<(const SqBinomial& o) const {
    return lead != o.lead ? lead < o.lead : trail < o.trail;
  }
};

// Generating set u_M f_ij over pairs i<j and minimal supports M with
// interiors below i or above j: lead u_M x_i y_j, trail u_M x_j y_i, where
// u_M multiplies x_k for k > j and y_k for k < i, k in M.
inline std::vector<SqBinomial> admissible_binomials(const Graph& g) {
  require(g.n <= 20, "admissible_binomials: n <= 20");
  int n = g.n;
  auto xv = [&](int k) { return bit(k); };
  auto yv = [&](int k) { return bit(n + k); };
  std::vector<SqBinomial> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mask pool = (low_mask(i) | (g.vmask() & ~low_mask(j + 1)));
      std::vector<Mask> supports =
          g.adjacent(i, j) ? std::vector<Mask>{0} : minimal_connectors(g, i, j, pool);
      for (Mask m : supports) {
        Mask u = 0;
        for (int k : bits(m)) u |= (k > j) ? xv(k) : yv(k);
        out.push_back({u | xv(i) | yv(j), u | xv(j) | yv(i)});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal generators of the lex initial ideal, via the combinatorial basis.
inline SqIdeal initial_ideal(const Graph& g) {
  SqIdeal ideal;
  ideal.nvars = 2 * g.n;
  std::vector<Mask> leads;
  for (const auto& b : admissible_binomials(g)) leads.push_back(b.lead);
  ideal.gens = minimalize_masks(std::move(leads));
  return ideal;
}

// --- Buchberger oracle on exponent vectors (n <= 8, 16 variables) ---

struct Mono {
  std::array<std::uint8_t, 16> e{};

  int deg() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
  }
  bool squarefree() const {
    for (auto v : e)
      if (v > 1) return false;
    return true;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
  // lex with slot 0 most significant
  friend bool lex_less(const Mono& a, const Mono& b) {
    for (int k = 0; k < 16; ++k)
      if (a.e[k] != b.e[k]) return a.e[k] < b.e[k];
    return false;
  }
  friend bool operator<(const Mono& a, const Mono& b) { return lex_less(a, b); }
  friend bool divides(const Mono& a, const Mono& b) {  // a | b
    for (int k = 0; k < 16; ++k)
      if (a.e[k] > b.e[k]) return false;
    return true;
  }
  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono c;
    for (int k = 0; k < 16; ++k) c.e[k] = static_cast<std::uint8_t>(a.e[k] + b.e[k]);
    return c;
  }
  friend Mono quotient(const Mono& a, const Mono& b) {  // a / b, b | a
    Mono c;
    for (int k = 0; k < 16; ++k) c.e[k] = static_cast<std::uint8_t>(a.e[k] - b.e[k]);
    return c;
  }
  friend Mono lcm(const Mono& a, const Mono& b) {
    Mono c;
    for (int k = 0; k < 16; ++k) c.e[k] = std::max(a.e[k], b.e[k]);
    return c;
  }
  friend bool coprime(const Mono& a, const Mono& b) {
    for (int k = 0; k < 16; ++k)
      if (a.e[k] && b.e[k]) return false;
    return true;
  }
};

inline Mono mono_from_mask(Mask m) {
  Mono r;
  for (int k : bits(m)) {
    require(k < 16, "mono_from_mask: variable index >= 16");
    r.e[k] = 1;
  }
  return r;
}

struct Binomial {
  Mono lead, trail;  // lead - trail, lead > trail in lex
  bool operator==(const Binomial& o) const {
    return lead == o.lead && trail == o.trail;
  }
  bool operator<(const Binomial& o) const {
    if (lead != o.lead) return lex_less(lead, o.lead);
    return lex_less(trail, o.trail);
  }
};

namespace detail {

// Full normal form of the pure difference p - q against basis; zero is
// signalled by returning false.
inline bool normal_form(Mono p, Mono q, const std::vector<Binomial>& basis, Binomial& out) {
  auto reduce_once = [&](Mono& m) {
    for (const auto& b : basis)
      if (divides(b.lead, m)) {
        m = quotient(m, b.lead) * b.trail;
        return true;
      }
    return false;
  };
  for (;;) {
    if (p == q) return false;
    if (lex_less(p, q)) std::swap(p, q);
    if (!reduce_once(p)) break;
  }
  while (reduce_once(q)) {
    if (p == q) return false;
  }
  if (lex_less(p, q)) std::swap(p, q);  // trail reductions stay below p, but be safe
  out = {p, q};
  return true;
}

}  // namespace detail

// Reduced lex Groebner basis of the edge-binomial ideal, from scratch.
inline std::vector<Binomial> buchberger_reduced(const Graph& g) {
  require(g.n <= 8, "buchberger_reduced: n <= 8");
  int n = g.n;
  std::vector<Binomial> basis;
  for (auto [i, j] : g.edges()) {
    Mono lead, trail;
    lead.e[i] = 1;
    lead.e[n + j] = 1;
    trail.e[j] = 1;
    trail.e[n + i] = 1;
    basis.push_back({lead, trail});
  }
  std::sort(basis.begin(), basis.end());

  // pair queue ordered by (lcm degree, lcm, indices): normal selection
  struct Pair {
    int deg;
    Mono l;
    int a, b;
    bool operator<(const Pair& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (l != o.l) return lex_less(l, o.l);
      if (a != o.a) return a < o.a;
      return b < o.b;
    }
  };
  std::set<Pair> queue;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t a = 0; a < k; ++a) {
      Mono l = lcm(basis[a].lead, basis[k].lead);
      queue.insert({l.deg(), l, (int)a, (int)k});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    const Binomial &f = basis[pr.a], &h = basis[pr.b];
    if (coprime(f.lead, h.lead)) continue;  // product criterion
    Mono u = lcm(f.lead, h.lead);
    // S = (u/lf) trail_f ... minus ... (u/lh) trail_h, as a pure difference
    Mono p = quotient(u, h.lead) * h.trail;
    Mono q = quotient(u, f.lead) * f.trail;
    Binomial r;
    if (!detail::normal_form(p, q, basis, r)) continue;
    basis.push_back(r);
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::sort(basis.begin(), basis.end());
  std::vector<Binomial> min;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k)
      if (k != i && divides(basis[k].lead, basis[i].lead) &&
          !(basis[k].lead == basis[i].lead && k > i))
        redundant = true;
    if (!redundant) min.push_back(basis[i]);
  }
  // tail-reduce: normal form of each trail against the other elements
  std::vector<Binomial> reduced;
  for (std::size_t i = 0; i < min.size(); ++i) {
    Mono t = min[i].trail;
    for (bool again = true; again;) {
      again = false;
      for (std::size_t k = 0; k < min.size(); ++k)
        if (k != i && divides(min[k].lead, t)) {
          t = quotient(t, min[k].lead) * min[k].trail;
          again = true;
        }
    }
    require(t != min[i].lead, "buchberger: element collapsed during tail reduction");
    reduced.push_back({min[i].lead, t});
  }
  std::sort(reduced.begin(), reduced.end());
  return reduced;
}

inline std::vector<Mask> buchberger_lead_masks(const Graph& g) {
  std::vector<Mask> leads;
  for (const auto& b : buchberger_reduced(g)) {
    Mask m = 0;
    for (int k = 0; k < 16; ++k) {
      require(b.lead.e[k] <= 1, "initial ideal not squarefree");
      if (b.lead.e[k]) m |= bit(k);
    }
    leads.push_back(m);
  }
  return minimalize_masks(std::move(leads));
}

}  // namespace bei
