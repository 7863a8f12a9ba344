#pragma once

// Graph-family sweeps: exhaustive labeled enumeration with canonical dedup,
// and seeded random families (chordal by simplicial attachment, iid graphs,
// caterpillars). Reports are deterministic for a fixed seed.

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "bei/checks.hpp"
#include "bei/graph.hpp"

namespace bei {

// Exactly uniform on [0, n) and reproducible: rejection off a power-of-two
// mask, independent of library distribution internals.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  require(n > 0, "rng_below: empty range");
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t r = rng() & mask;
    if (r < n) return r;
  }
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[(int)rng_below(rng, i + 1)]);
  return p;
}

// Edge flips iid with probability 1/2.
inline Graph random_graph(std::mt19937_64& rng, int n) {
  require(n >= 1 && n <= 64, "random_graph: 1 <= n <= 64");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) edges.push_back({i, j});
  return build_graph(n, edges);
}

// Start from a single vertex; repeatedly attach a new vertex to a uniformly
// chosen nonempty clique of the current graph. The attachment order read
// backwards is a perfect elimination ordering, so the result is chordal and
// connected by construction.
inline Graph random_chordal(std::mt19937_64& rng, int n) {
  require(n >= 1 && n <= 16, "random_chordal: 1 <= n <= 16");
  Graph g = empty_graph(1);
  while (g.n < n) {
    std::vector<Mask> cliques;
    for (Mask m = 1; m <= g.vmask(); ++m)
      if (is_clique(g, m)) cliques.push_back(m);
    Mask pick = cliques[rng_below(rng, cliques.size())];
    std::vector<std::pair<int, int>> edges;
    for (auto [u, w] : g.edges()) edges.push_back({u, w});
    for (int u : bits(pick)) edges.push_back({u, g.n});
    g = build_graph(g.n + 1, edges);
  }
  return g;
}

// Caterpillar with at least one vertex of degree >= 3 (not a path).
inline Graph random_caterpillar(std::mt19937_64& rng, int max_n) {
  require(max_n >= 4, "random_caterpillar: max_n >= 4");
  for (;;) {
    int spine = 2 + (int)rng_below(rng, max_n - 3);  // 2..max_n-2
    int leaves = 1 + (int)rng_below(rng, max_n - spine);
    std::vector<int> legs(spine, 0);
    for (int i = 0; i < leaves; ++i) ++legs[rng_below(rng, spine)];
    Graph g = caterpillar_graph(spine, legs);
    bool pathlike = true;
    for (int v = 0; v < g.n && pathlike; ++v)
      if (g.degree(v) > 2) pathlike = false;
    if (!pathlike) return g;
  }
}

struct GraphReport {
  std::string key;  // graph6 fingerprint of the instance checked
  int n = 0;
  long long multiplicity = 1;  // labeled instances collapsed into this class
  std::vector<CheckResult> results;
};

struct SweepReport {
  std::string family;
  long long enumerated = 0;  // graphs generated or visited
  long long checked = 0;     // graphs that received the check suite
  std::vector<GraphReport> graphs;
  std::map<std::string, std::map<std::string, long long>> tally;  // id->verdict
  double seconds = 0;  // wall clock; for human output only

  long long failures() const {
    long long f = 0;
    for (const auto& [id, vs] : tally)
      for (const auto& [v, k] : vs)
        if (v == "fail") f += k;
    return f;
  }
  bool ok() const { return failures() == 0; }
};

struct SweepOptions {
  std::vector<std::string> checks;  // empty: full catalog
  bool dedup = true;
  HochsterOptions hochster;
};

namespace detail {

inline void sweep_run(SweepReport& rep, const Graph& g, long long mult,
                      const SweepOptions& opt) {
  GraphReport gr;
  gr.key = write_graph6(g);
  gr.n = g.n;
  gr.multiplicity = mult;
  gr.results = run_checks(g, opt.checks, opt.hochster);
  for (const auto& r : gr.results) ++rep.tally[r.id][r.verdict];
  rep.graphs.push_back(std::move(gr));
  ++rep.checked;
}

}  // namespace detail

// All labeled graphs on 1..max_n vertices; connected graphs receive the
// check suite, optionally collapsed by canonical form first. Without dedup
// the suite runs on every labeled instance: fine for max_n <= 4, slow above.
inline SweepReport sweep_exhaustive(int max_n, SweepOptions opt = {}) {
  require(max_n >= 1 && max_n <= 6, "sweep_exhaustive: 1 <= n <= 6");
  auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.family = "exhaustive n<=" + std::to_string(max_n) +
               (opt.dedup ? " dedup" : " labeled");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::map<std::uint64_t, std::pair<Graph, long long>> classes;
    for (std::uint64_t m = 0; m < (1ULL << pairs.size()); ++m) {
      ++rep.enumerated;
      std::vector<std::pair<int, int>> edges;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (m & (1ULL << b)) edges.push_back(pairs[b]);
      Graph g = build_graph(n, edges);
      if (!is_connected(g)) continue;
      if (opt.dedup) {
        auto [it, fresh] = classes.try_emplace(canonical_key(g), g, 0);
        ++it->second.second;
        (void)fresh;
      } else {
        detail::sweep_run(rep, g, 1, opt);
      }
    }
    for (auto& [key, inst] : classes)
      detail::sweep_run(rep, inst.first, inst.second, opt);
  }
  std::sort(rep.graphs.begin(), rep.graphs.end(),
            [](const GraphReport& a, const GraphReport& b) {
              return std::tie(a.n, a.key) < std::tie(b.n, b.key);
            });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

// `count` seeded random chordal graphs on exactly n vertices.
inline SweepReport sweep_random(int n, int count, std::uint64_t seed,
                                SweepOptions opt = {}) {
  require(n >= 1 && n <= 16, "sweep_random: 1 <= n <= 16");
  require(count >= 1, "sweep_random: count >= 1");
  auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.family = "random chordal n=" + std::to_string(n) + " count=" +
               std::to_string(count) + " seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    Graph g = random_chordal(rng, n);
    ++rep.enumerated;
    detail::sweep_run(rep, g, 1, opt);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace bei
