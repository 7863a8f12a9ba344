#include "catch_amalgamated.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "bei/fixtures.hpp"
#include "bei/hilbert.hpp"
#include "bei/hochster.hpp"
#include "bei/sweep.hpp"

using namespace bei;
using boost::multiprecision::cpp_rational;

namespace {

// test-local oracle: dense boundary matrices + Gaussian elimination
struct NaiveComplex {
  std::vector<std::vector<Mask>> by_size;  // by_size[s] = faces with s vertices

  explicit NaiveComplex(const std::vector<Mask>& facets) {
    std::set<Mask> closed;
    for (Mask f : facets) {
      // closure by subset enumeration
      for (Mask s = f;; s = (s - 1) & f) {
        closed.insert(s);
        if (s == 0) break;
      }
    }
    for (Mask f : closed) {
      if ((int)by_size.size() <= bit_count(f)) by_size.resize(bit_count(f) + 1);
      by_size[bit_count(f)].push_back(f);
    }
  }

  // signed boundary matrix C_s -> C_{s-1}
  std::vector<std::vector<int>> boundary(int s) const {
    if (s <= 0 || s >= (int)by_size.size()) return {};
    std::map<Mask, int> row;
    for (std::size_t r = 0; r < by_size[s - 1].size(); ++r) row[by_size[s - 1][r]] = (int)r;
    std::vector<std::vector<int>> m(by_size[s - 1].size(),
                                    std::vector<int>(by_size[s].size(), 0));
    for (std::size_t c = 0; c < by_size[s].size(); ++c) {
      Mask f = by_size[s][c];
      int sign = 1;
      for (int v : bits(f)) {
        m[row.at(f ^ bit(v))][c] = sign;
        sign = -sign;
      }
    }
    return m;
  }
};

int naive_rank_q(std::vector<std::vector<int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  std::vector<std::vector<cpp_rational>> a(m.size(), std::vector<cpp_rational>(m[0].size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[0].size(); ++c) a[r][c] = m[r][c];
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a[0].size() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != rank && a[r][c] != 0) {
        cpp_rational f = a[r][c] / a[rank][c];
        for (std::size_t k = c; k < a[0].size(); ++k) a[r][k] -= f * a[rank][k];
      }
    ++rank;
  }
  return (int)rank;
}

int naive_rank_f2(std::vector<std::vector<int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m[0].size() && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && (m[p][c] & 1) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && (m[r][c] & 1))
        for (std::size_t k = c; k < m[0].size(); ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return (int)rank;
}

std::vector<long long> naive_reduced_betti(const std::vector<Mask>& facets, Field field) {
  NaiveComplex cx(facets);
  int top = (int)cx.by_size.size() - 1;
  std::vector<int> rank(top + 2, 0);
  for (int s = 1; s <= top; ++s) {
    auto m = cx.boundary(s);
    rank[s] = field == Field::F2 ? naive_rank_f2(m) : naive_rank_q(m);
  }
  std::vector<long long> betti(top + 1, 0);
  for (int s = 1; s <= top; ++s)
    betti[s] = (long long)cx.by_size[s].size() - rank[s] - rank[s + 1];
  return betti;
}

void trim_zeros(std::vector<long long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// closed 6-vertex triangulation of the projective plane
std::vector<Mask> rp2_facets() {
  auto tri = [](int a, int b, int c) { return bit(a - 1) | bit(b - 1) | bit(c - 1); };
  return {tri(1, 2, 3), tri(1, 3, 4), tri(1, 4, 5), tri(1, 5, 6), tri(1, 2, 6),
          tri(2, 3, 5), tri(3, 4, 6), tri(4, 5, 2), tri(5, 6, 3), tri(6, 2, 4)};
}

// count degree-d monomials in nvars variables outside the monomial ideal
long long standard_monomials(const SqIdeal& I, int d) {
  long long count = 0;
  std::vector<int> e(I.nvars, 0);
  std::function<void(int, int)> go = [&](int var, int left) {
    if (var == I.nvars - 1) {
      e[var] = left;
      Mask support = 0;
      for (int k = 0; k < I.nvars; ++k)
        if (e[k] > 0) support |= bit(k);
      for (Mask g : I.gens)
        if ((g & support) == g) return;  // divisible
      ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      go(var + 1, left - k);
    }
  };
  go(0, d);
  return count;
}

// coefficients of h(t)/(1-t)^dim up to degree maxd
std::vector<long long> series_expand(const HPoly& hp, int maxd) {
  std::vector<long long> out(maxd + 1, 0);
  for (std::size_t k = 0; k < hp.h.size(); ++k)
    for (int d = (int)k; d <= maxd; ++d) {
      // C(d-k+dim-1, dim-1)
      long long b = 1;
      for (int i = 1; i <= hp.dim - 1; ++i) b = b * (d - (int)k + i) / i;
      if (hp.dim == 0) b = (d == (int)k) ? 1 : 0;
      out[d] += hp.h[k] * b;
    }
  return out;
}

}  // namespace

TEST_CASE("reduced homology of standard complexes") {
  // boundary of the tetrahedron: a 2-sphere
  std::vector<Mask> sphere;
  for (int v = 0; v < 4; ++v) sphere.push_back(low_mask(4) ^ bit(v));
  for (Field f : {Field::F2, Field::Q}) {
    auto b = simplicial_reduced_betti(sphere, f);
    trim_zeros(b);
    CHECK(b == std::vector<long long>{0, 0, 0, 1});  // only H~_2
  }

  // 5-cycle: a circle
  std::vector<Mask> circle;
  for (int v = 0; v < 5; ++v) circle.push_back(bit(v) | bit((v + 1) % 5));
  for (Field f : {Field::F2, Field::Q}) {
    auto b = simplicial_reduced_betti(circle, f);
    trim_zeros(b);
    CHECK(b == std::vector<long long>{0, 0, 1});  // only H~_1
  }

  // two points / one point
  auto two = simplicial_reduced_betti({bit(0), bit(1)}, Field::Q);
  trim_zeros(two);
  CHECK(two == std::vector<long long>{0, 1});
  auto one = simplicial_reduced_betti({bit(0)}, Field::F2);
  trim_zeros(one);
  CHECK(one.empty());

  // solid triangle: contractible
  auto solid = simplicial_reduced_betti({low_mask(3)}, Field::Q);
  trim_zeros(solid);
  CHECK(solid.empty());
}

TEST_CASE("projective plane separates the two fields") {
  auto facets = rp2_facets();
  // structural sanity: 10 triangles, every edge in exactly two of them
  std::map<Mask, int> edge_use;
  for (Mask t : facets)
    for (int v : bits(t)) edge_use[t ^ bit(v)]++;
  REQUIRE(edge_use.size() == 15);
  for (const auto& kv : edge_use) CHECK(kv.second == 2);

  auto f2 = simplicial_reduced_betti(facets, Field::F2);
  trim_zeros(f2);
  CHECK(f2 == std::vector<long long>{0, 0, 1, 1});  // H~_1 = H~_2 = Z/2
  auto q = simplicial_reduced_betti(facets, Field::Q);
  trim_zeros(q);
  CHECK(q.empty());  // rationally acyclic

  CHECK(naive_reduced_betti(facets, Field::F2) == simplicial_reduced_betti(facets, Field::F2));
  CHECK(naive_reduced_betti(facets, Field::Q) == simplicial_reduced_betti(facets, Field::Q));
}

TEST_CASE("homology engine matches the dense oracle on random complexes") {
  std::mt19937_64 rng(113);
  for (int it = 0; it < 30; ++it) {
    int nv = 4 + (int)rng_below(rng, 4);  // 4..7 vertices
    int nf = 3 + (int)rng_below(rng, 6);
    std::vector<Mask> facets;
    for (int f = 0; f < nf; ++f) {
      Mask m = rng_below(rng, Mask{1} << nv);
      if (m) facets.push_back(m);
    }
    if (facets.empty()) facets.push_back(bit(0));
    for (Field f : {Field::F2, Field::Q}) {
      auto got = simplicial_reduced_betti(facets, f);
      auto want = naive_reduced_betti(facets, f);
      trim_zeros(got);
      trim_zeros(want);
      CHECK(got == want);
    }
  }
}

TEST_CASE("betti tables of the smallest graphs") {
  auto k2 = graph_betti_table(complete_graph(2));
  REQUIRE(k2.entries.size() == 1);
  CHECK(k2.beta(1, 2) == 1);
  CHECK(k2.reg == 1);
  CHECK(k2.pd == 1);
  CHECK(k2.beta(0, 0) == 0);  // implicit, never stored

  // P_3: two coprime quadric leads, a Koszul pair
  auto p3 = graph_betti_table(path_graph(3));
  CHECK(p3.beta(1, 2) == 2);
  CHECK(p3.beta(2, 4) == 1);
  CHECK(p3.reg == 2);
  CHECK(p3.pd == 2);
  REQUIRE(p3.entries.size() == 2);

  auto k3 = graph_betti_table(complete_graph(3));
  CHECK(k3.beta(1, 2) == 3);
  CHECK(k3.beta(2, 3) == 2);
  CHECK(k3.reg == 1);
  CHECK(k3.pd == 2);
  REQUIRE(k3.entries.size() == 2);
}

TEST_CASE("regularity of paths and complete graphs") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(graph_regularity(path_graph(n)) == n - 1);
    CHECK(graph_regularity(complete_graph(n)) == 1);
  }
  HochsterOptions q;
  q.field = Field::Q;
  CHECK(graph_regularity(path_graph(5), q) == 4);
  CHECK(graph_regularity(complete_graph(5), q) == 1);
}

TEST_CASE("interval fixture betti table, frozen") {
  auto bt = graph_betti_table(fixture_interval_graph());
  CHECK(bt.reg == 3);
  CHECK(bt.pd == 6);
  CHECK(bt.entries.size() == 16);
  CHECK(bt.beta(1, 2) == 9);
  CHECK(bt.beta(3, 5) == 53);
  CHECK(bt.beta(6, 9) == 4);

  HochsterOptions q;
  q.field = Field::Q;
  auto btq = graph_betti_table(fixture_interval_graph(), q);
  CHECK(btq.entries.size() == bt.entries.size());
  for (const auto& e : bt.entries) CHECK(btq.beta(e.i, e.j) == e.value);
}

TEST_CASE("fields agree on chordal samples") {
  std::mt19937_64 rng(57);
  HochsterOptions q;
  q.field = Field::Q;
  for (int it = 0; it < 3; ++it) {
    Graph g = random_chordal(rng, 7);
    auto a = graph_betti_table(g);
    auto b = graph_betti_table(g, q);
    REQUIRE(a.entries.size() == b.entries.size());
    for (const auto& e : a.entries) CHECK(b.beta(e.i, e.j) == e.value);
  }
}

TEST_CASE("betti table of a plain monomial ideal") {
  // (x0 x1, x1 x2) in four variables: Taylor complex is exact here
  SqIdeal I;
  I.nvars = 4;
  I.gens = {bit(0) | bit(1), bit(1) | bit(2)};
  auto bt = betti_table(I);
  CHECK(bt.beta(1, 2) == 2);
  CHECK(bt.beta(2, 3) == 1);
  CHECK(bt.reg == 1);
  CHECK(ideal_regularity(I) == 1);

  auto hp = hilbert_series(I);
  CHECK(hp.dim == 3);
  CHECK(kpolynomial_matches(bt, hp, I.nvars));
}

TEST_CASE("hilbert series of small graphs") {
  auto k2 = graph_hilbert_series(complete_graph(2));
  CHECK(k2.h == Poly{1, 1});
  CHECK(k2.dim == 3);

  auto p3 = graph_hilbert_series(path_graph(3));
  CHECK(p3.h == Poly{1, 2, 1});
  CHECK(p3.dim == 4);

  auto fig3 = graph_hilbert_series(fixture_interval_graph());
  CHECK(fig3.h == Poly{1, 5, 6, -2, -4});
  CHECK(fig3.dim == 7);
  CHECK(poly_eval1(fig3.h) == 6);  // multiplicity

  // P_8 is a complete intersection of 7 quadrics
  auto p8 = graph_hilbert_series(path_graph(8));
  Poly expect{1};
  for (int i = 0; i < 7; ++i) expect = poly_mul(expect, Poly{1, 1});
  CHECK(p8.h == expect);
  CHECK(p8.dim == 9);
}

TEST_CASE("hilbert series against direct monomial counting") {
  std::vector<Graph> samples = {path_graph(3), path_graph(4), complete_graph(3),
                                complete_graph(4), star_graph(3), cycle_graph(4)};
  for (const Graph& g : samples) {
    SqIdeal I = initial_ideal(g);
    HPoly hp = hilbert_series(I);
    auto series = series_expand(hp, 5);
    for (int d = 0; d <= 5; ++d) CHECK(series[d] == standard_monomials(I, d));
  }
}

TEST_CASE("k-polynomial identity ties betti tables to hilbert series") {
  for (const Graph& g : {path_graph(4), complete_graph(4), cycle_graph(5),
                         star_graph(4), fixture_interval_graph()}) {
    auto bt = graph_betti_table(g);
    auto hp = graph_hilbert_series(g);
    CHECK(kpolynomial_matches(bt, hp, 2 * g.n));
    // and it fails when the table is corrupted
    auto broken = bt;
    REQUIRE(!broken.entries.empty());
    broken.entries[0].value += 1;
    CHECK_FALSE(kpolynomial_matches(broken, hp, 2 * g.n));
  }
}

TEST_CASE("join family closed form") {
  for (int m : {3, 4, 5})
    for (int t : {1, 2}) {
      Graph g = join_family_graph(m, t);
      REQUIRE(g.n == m + t);
      HPoly engine = graph_hilbert_series(g);
      HPoly closed = join_family_h(m, t);
      CHECK(engine == closed);
      CHECK(closed.dim == m + t + 1);
      CHECK(closed.degree() == m + t - 1);
      CHECK(clique_count(g) == m - 1);
    }
  CHECK_THROWS(join_family_h(2, 1));
  CHECK_THROWS(join_family_h(3, 0));
}

TEST_CASE("joint limit table") {
  auto tab = joint_limit_table(3, 2);
  REQUIRE(tab.rows.size() == 2);
  CHECK(tab.m == 3);
  CHECK(tab.rows[0].t == 1);
  CHECK(tab.rows[0].deg_h == 3);
  CHECK(tab.rows[0].n_minus_2 == 2);
  CHECK(tab.rows[1].deg_h == 4);
  CHECK(tab.rows[1].n_minus_2 == 3);
  CHECK(tab.ratios_strictly_decreasing());

  auto one = joint_limit_table(5, 1);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0].deg_h == 5);
  CHECK(one.ratios_strictly_decreasing());

  auto big = joint_limit_table(4, 12);
  CHECK(big.ratios_strictly_decreasing());
  CHECK_THROWS(joint_limit_table(2, 3));
  CHECK_THROWS(joint_limit_table(4, 0));
}
