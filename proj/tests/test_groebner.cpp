#include "catch_amalgamated.hpp"

#include <random>

#include "bei/fixtures.hpp"
#include "bei/groebner.hpp"
#include "bei/sweep.hpp"

using namespace bei;

namespace {

// admissible set rendered on the oracle's exponent vectors
std::vector<Binomial> as_binomials(const Graph& g) {
  std::vector<Binomial> out;
  for (const auto& b : admissible_binomials(g))
    out.push_back({mono_from_mask(b.lead), mono_from_mask(b.trail)});
  std::sort(out.begin(), out.end());
  return out;
}

void check_agreement(const Graph& g) {
  auto combinatorial = as_binomials(g);
  auto oracle = buchberger_reduced(g);
  CHECK(combinatorial == oracle);
  for (const auto& b : oracle) {
    CHECK(b.lead.squarefree());
    CHECK(b.trail.squarefree());
  }
  auto ideal = initial_ideal(g);
  CHECK(ideal.nvars == 2 * g.n);
  CHECK(ideal.gens == buchberger_lead_masks(g));
}

}  // namespace

TEST_CASE("minimalize_masks") {
  CHECK(minimalize_masks({0b11, 0b111, 0b101, 0b1}) == std::vector<Mask>{0b1});
  CHECK(minimalize_masks({0b110, 0b011, 0b011}) == std::vector<Mask>{0b011, 0b110});
  CHECK(minimalize_masks({}) == std::vector<Mask>{});
  CHECK(minimalize_masks({0}) == std::vector<Mask>{0});  // unit kills everything
  CHECK(minimalize_masks({0b10, 0}) == std::vector<Mask>{0});
}

TEST_CASE("minimal_connectors") {
  // 1-3, 2-3 (one-based): the only 1..2 route passes through 3
  Graph g = build_graph(3, {{0, 2}, {1, 2}});
  CHECK(minimal_connectors(g, 0, 1, bit(2)) == std::vector<Mask>{bit(2)});
  CHECK(minimal_connectors(g, 0, 1, 0) == std::vector<Mask>{});

  Graph c4 = cycle_graph(4);  // 0-1-2-3-0
  CHECK(minimal_connectors(c4, 0, 2, bit(3)) == std::vector<Mask>{bit(3)});
  CHECK(minimal_connectors(c4, 1, 3, bit(0)) == std::vector<Mask>{bit(0)});

  // two parallel connectors; their union is dominated
  Graph par = build_graph(6, {{0, 4}, {4, 1}, {0, 5}, {5, 1}, {4, 5}});
  auto ms = minimal_connectors(par, 0, 1, bit(4) | bit(5));
  CHECK(ms == std::vector<Mask>{bit(4), bit(5)});
}

TEST_CASE("admissible binomials on tiny graphs") {
  // path 0-1-2: just the two edge binomials (the through-route is interior)
  Graph p3 = path_graph(3);
  auto ps = admissible_binomials(p3);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == SqBinomial{bit(0) | bit(4), bit(1) | bit(3)});
  CHECK(ps[1] == SqBinomial{bit(1) | bit(5), bit(2) | bit(4)});

  // same path relabeled so the middle sorts last: an extra x_3 f_12 appears
  Graph vee = build_graph(3, {{0, 2}, {1, 2}});
  auto vs = admissible_binomials(vee);
  REQUIRE(vs.size() == 3);
  CHECK(vs[0] == SqBinomial{bit(0) | bit(2) | bit(4), bit(1) | bit(2) | bit(3)});

  // triangle: exactly the three edge binomials, nothing else
  auto ts = admissible_binomials(complete_graph(3));
  CHECK(ts.size() == 3);
  CHECK(buchberger_reduced(complete_graph(3)).size() == 3);

  // claw centered at the lex-first vertex: each leaf pair adds y_0 f_ij
  Graph claw = star_graph(3);
  auto cs = admissible_binomials(claw);
  REQUIRE(cs.size() == 6);
  int with_y0 = 0;
  for (const auto& b : cs)
    if (b.lead & bit(4)) ++with_y0;  // y_0 lives at bit n+0 = 4
  CHECK(with_y0 == 3);
}

TEST_CASE("initial ideal generators") {
  auto p3 = initial_ideal(path_graph(3));
  CHECK(p3.gens == std::vector<Mask>{bit(0) | bit(4), bit(1) | bit(5)});
  auto k3 = initial_ideal(complete_graph(3));
  CHECK(k3.gens.size() == 3);
  for (Mask m : k3.gens) CHECK(bit_count(m) == 2);
}

TEST_CASE("combinatorial basis equals the Buchberger oracle, exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    for (std::uint64_t m = 0; m < (1ULL << pairs.size()); ++m) {
      std::vector<std::pair<int, int>> e;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (m & (1ULL << b)) e.push_back(pairs[b]);
      Graph g = build_graph(n, e);
      if (!is_connected(g)) continue;
      check_agreement(g);
    }
  }
}

TEST_CASE("combinatorial basis equals the Buchberger oracle, random n=5,6") {
  std::mt19937_64 rng(271828);
  for (int n : {5, 6})
    for (int it = 0; it < 10; ++it) check_agreement(random_graph(rng, n));
}

TEST_CASE("named graphs: basis sizes and shape") {
  check_agreement(cycle_graph(5));
  check_agreement(fixture_interval_graph());
  check_agreement(path_graph(6));
  check_agreement(complete_graph(5));

  // K_n: every pair is an edge, no connectors
  CHECK(admissible_binomials(complete_graph(5)).size() == 10);
  // C_n gains one wrap-around binomial per non-edge route through vertex 0 or n-1
  CHECK(admissible_binomials(cycle_graph(4)).size() == 4 + 2);
}
