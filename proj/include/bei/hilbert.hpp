#pragma once

// Hilbert series of a squarefree monomial quotient S/I from the f-vector of
// its vanishing complex: N(t) = sum_s f_s t^s (1-t)^(D-s) over (1-t)^D,
// cancelled down to h(t)/(1-t)^dim with h(1) != 0. Variables outside every
// generator are cone directions and enter through binomial convolution.

#include <vector>

#include "bei/hochster.hpp"

namespace bei {

using Poly = std::vector<long long>;  // Poly[k] = coefficient of t^k

inline void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
  poly_trim(c);
  return c;
}

inline Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  poly_trim(a);
  return a;
}

inline long long poly_eval1(const Poly& p) {
  long long s = 0;
  for (long long c : p) s += c;
  return s;
}

// (1-t)^k
inline Poly poly_one_minus_t_pow(int k) {
  Poly p{1};
  for (int i = 0; i < k; ++i) p = poly_mul(p, Poly{1, -1});
  return p;
}

struct HPoly {
  Poly h;
  int dim = 0;  // Krull dimension of S/I

  int degree() const { return (int)h.size() - 1; }
  bool operator==(const HPoly& o) const { return h == o.h && dim == o.dim; }
};

inline HPoly hilbert_series(const SqIdeal& I) {
  Mask U = 0;
  for (Mask g : I.gens) U |= g;
  require(bit_count(U) <= 20, "hilbert: generator support <= 20 variables");
  require(I.nvars >= bit_count(U), "hilbert: nvars smaller than support");

  // f-vector over the support, then cone directions via binomials
  std::vector<long long> fsU(bit_count(U) + 1, 0);
  {
    std::vector<Mask> gens_in;
    std::vector<std::uint64_t> faces;
    int pot = 0;
    detail::plan_for(I.gens, U, gens_in, &pot);  // gens_in = all gens
    detail::enumerate_faces(U, gens_in, faces);
    for (auto m : faces) ++fsU[bit_count(m)];
  }
  int D = I.nvars, free = D - bit_count(U);
  std::vector<long long> fs(D + 1, 0);
  {
    // C(free, k)
    std::vector<long long> ch(free + 1, 0);
    ch[0] = 1;
    for (int i = 1; i <= free; ++i) ch[i] = ch[i - 1] * (free - i + 1) / i;
    for (std::size_t s = 0; s < fsU.size(); ++s)
      for (int k = 0; k <= free; ++k)
        if (fsU[s]) fs[s + k] += fsU[s] * ch[k];
  }
  Poly N{0};
  for (int s = 0; s <= D; ++s)
    if (fs[s]) {
      Poly term = poly_one_minus_t_pow(D - s);
      term.insert(term.begin(), s, 0);  // * t^s
      for (auto& c : term) c *= fs[s];
      N = poly_add(N, term);
    }
  int dim = D;
  while (poly_eval1(N) == 0 && N.size() > 1) {
    // N / (1 - t): q_k = N_k + q_{k-1}
    Poly q(N.size() - 1, 0);
    long long carry = 0;
    for (std::size_t k = 0; k + 1 < N.size(); ++k) {
      carry += N[k];
      q[k] = carry;
    }
    N = std::move(q);
    poly_trim(N);
    --dim;
  }
  return {N, dim};
}

inline HPoly graph_hilbert_series(const Graph& g) {
  require(g.n <= 10, "graph_hilbert_series: n <= 10");
  return hilbert_series(initial_ideal(g));
}

// Closed form for the path-join family: path on m joined with a complete
// graph on t, m >= 3, t >= 1. Numerator
// (1-t)^t ((1+t)^(m-1) - m t + t - 1) + (m+t-1) t + 1, dimension m+t+1.
inline HPoly join_family_h(int m, int t) {
  require(m >= 3 && t >= 1, "join_family_h: m >= 3, t >= 1");
  Poly onep{1};  // (1+t)^(m-1)
  for (int i = 0; i < m - 1; ++i) onep = poly_mul(onep, Poly{1, 1});
  Poly inner = poly_add(onep, Poly{-1, -(long long)m + 1});
  Poly num = poly_mul(poly_one_minus_t_pow(t), inner);
  num = poly_add(num, Poly{1, m + t - 1});
  return {num, m + t + 1};
}

inline Graph join_family_graph(int m, int t) {
  return graph_join(path_graph(m), complete_graph(t));
}

// One row per t: exact data for the path-join family on n = m+t vertices.
// Both ratios share the constant numerator c = m-1, so they decrease
// strictly as t grows; the table states them unreduced for readability.
struct LimitRow {
  int t = 0;
  long long c = 0, deg_h = 0, n_minus_2 = 0;
};

struct LimitTable {
  int m = 0;
  std::vector<LimitRow> rows;

  bool ratios_strictly_decreasing() const {
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const LimitRow &a = rows[i], &b = rows[i + 1];
      // a.c/a.den > b.c/b.den  <=>  a.c * b.den > b.c * a.den
      if (!(a.c * b.deg_h > b.c * a.deg_h)) return false;
      if (!(a.c * b.n_minus_2 > b.c * a.n_minus_2)) return false;
    }
    return true;
  }
};

inline LimitTable joint_limit_table(int m, int t_max) {
  require(m >= 3, "joint_limit_table: m >= 3");
  require(t_max >= 1, "joint_limit_table: t_max >= 1");
  require(m + t_max <= 60, "joint_limit_table: m + t_max <= 60");
  LimitTable table;
  table.m = m;
  for (int t = 1; t <= t_max; ++t) {
    HPoly h = join_family_h(m, t);
    require(h.degree() == m + t - 1, "joint_limit_table: degree mismatch");
    table.rows.push_back({t, m - 1, (long long)h.degree(), m + t - 2});
  }
  return table;
}

// Alternating-sum identity: sum_i (-1)^i beta_{i,j} t^j == h(t) (1-t)^(D-dim).
inline bool kpolynomial_matches(const BettiTable& bt, const HPoly& hp, int D) {
  Poly K{1};  // implicit beta_{0,0} = 1 of the quotient
  for (const auto& e : bt.entries) {
    Poly term(e.j + 1, 0);
    term[e.j] = (e.i % 2 == 0) ? e.value : -e.value;
    K = poly_add(K, term);
  }
  Poly rhs = poly_mul(hp.h, poly_one_minus_t_pow(D - hp.dim));
  poly_trim(K);
  return K == rhs;
}

}  // namespace bei
