#pragma once

// Betti numbers and regularity of a squarefree monomial quotient S/I through
// restricted simplicial homology: for each subset W of the variables, the
// reduced homology of the restricted vanishing complex contributes
// beta_{i,|W|} with i = |W| - dim - 1.
//
// Engine per W: enumerate the faces (subsets of W containing no generator),
// collapse with elementary coreduction pairs (a cell with exactly one live
// boundary cell is removed together with it; incidences are +-1, so plain
// restriction of the boundary preserves homology over any field), then take
// exact ranks of the small leftover boundary matrices: GF(2) bitset
// elimination by default, exact rationals on request.
//
// Exact prunes only: subsets W that miss the generator support or contain a
// vertex lying in no generator inside W give cones (no reduced homology).
// The regularity path additionally processes W in decreasing order of the
// bound |W| - (greedy disjoint-generator packing), a true upper bound for
// any contribution of W, and stops when the bound cannot beat the best.

#include <atomic>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bei/groebner.hpp"

namespace bei {

enum class Field { F2, Q };

struct HochsterOptions {
  Field field = Field::F2;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct BettiEntry {
  int i = 0, j = 0;
  long long value = 0;
};

struct BettiTable {
  // Sorted by (j, i); zero entries omitted. The table describes the quotient
  // S/I, whose beta_{0,0} = 1 is implicit and not stored.
  std::vector<BettiEntry> entries;
  int reg = 0;
  int pd = 0;

  long long beta(int i, int j) const {
    for (const auto& e : entries)
      if (e.i == i && e.j == j) return e.value;
    return 0;
  }
};

namespace detail {

// open-addressing map from face mask to cell index
struct FaceMap {
  std::vector<std::uint64_t> keys;
  std::vector<std::int32_t> vals;
  std::uint64_t cap_mask = 0;
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  void build(const std::vector<std::uint64_t>& masks) {
    std::size_t cap = 16;
    while (cap < masks.size() * 2) cap <<= 1;
    cap_mask = cap - 1;
    keys.assign(cap, kEmpty);
    vals.assign(cap, -1);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::uint64_t h = hash(masks[i]);
      while (keys[h] != kEmpty) h = (h + 1) & cap_mask;
      keys[h] = masks[i];
      vals[h] = (std::int32_t)i;
    }
  }
  std::uint64_t hash(std::uint64_t x) const {
    x *= 0x9e3779b97f4a7c15ULL;
    x ^= x >> 29;
    return x & cap_mask;
  }
  std::int32_t find(std::uint64_t key) const {
    std::uint64_t h = hash(key);
    while (keys[h] != kEmpty) {
      if (keys[h] == key) return vals[h];
      h = (h + 1) & cap_mask;
    }
    return -1;
  }
};

// All faces of the complex on W whose minimal non-faces are gens_in (each a
// subset of W). Output order: DFS ascending; the empty face comes first.
inline void enumerate_faces(Mask W, const std::vector<Mask>& gens_in,
                            std::vector<std::uint64_t>& out) {
  out.clear();
  std::vector<int> vars;
  for (int v : bits(W)) vars.push_back(v);
  int nv = (int)vars.size();
  // generator lists per variable position
  std::vector<std::vector<Mask>> by_var(nv);
  Mask forb0 = 0;
  for (Mask g : gens_in) {
    if (bit_count(g) == 1) forb0 |= g;
    for (int p = 0; p < nv; ++p)
      if (g & bit(vars[p])) by_var[p].push_back(g);
  }
  struct Frame {
    Mask sigma, forb;
    int pos;
  };
  std::vector<Frame> stack;
  stack.push_back({0, forb0, 0});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    out.push_back(f.sigma);
    // push extensions in reverse so lower positions pop first (lex order)
    for (int p = nv - 1; p >= f.pos; --p) {
      int v = vars[p];
      if (f.forb & bit(v)) continue;
      Mask sigma = f.sigma | bit(v);
      Mask forb = f.forb;
      for (Mask g : by_var[p]) {
        Mask miss = g & ~sigma;
        if (miss && !(miss & (miss - 1))) forb |= miss;  // one vertex short
      }
      stack.push_back({sigma, forb, p + 1});
    }
  }
}

inline int rank_f2(const std::vector<std::vector<std::uint64_t>>& cols) {
  std::vector<std::vector<std::uint64_t>> pivots;
  std::vector<int> pivot_bit;
  int rank = 0;
  for (auto col : cols) {
    for (;;) {
      int b = -1;
      for (std::size_t blk = 0; blk < col.size(); ++blk)
        if (col[blk]) {
          b = (int)(blk * 64) + std::countr_zero(col[blk]);
          break;
        }
      if (b < 0) break;
      bool reduced = false;
      for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivot_bit[k] == b) {
          for (std::size_t blk = 0; blk < col.size(); ++blk) col[blk] ^= pivots[k][blk];
          reduced = true;
          break;
        }
      if (!reduced) {
        pivots.push_back(col);
        pivot_bit.push_back(b);
        ++rank;
        break;
      }
    }
  }
  return rank;
}

inline int rank_q(std::vector<std::vector<boost::multiprecision::cpp_rational>>& m) {
  using boost::multiprecision::cpp_rational;
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r)
      if (m[r][c] != 0) {
        cpp_rational f = m[r][c] / m[rank][c];
        for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
      }
    ++rank;
  }
  return rank;
}

// Reduced betti numbers of the complex given by its full face list
// (including the empty face). betti[s] = dim H~_{s-1}.
inline std::vector<long long> reduced_betti_faces(std::vector<std::uint64_t>& faces,
                                                  Mask W, Field field) {
  int topsz = 0;
  for (auto m : faces) topsz = std::max(topsz, bit_count(m));
  // bucket by size, keep global indexing
  std::vector<std::uint64_t> cells;
  cells.reserve(faces.size());
  std::vector<std::int32_t> size_begin(topsz + 2, 0);
  {
    std::vector<int> cnt(topsz + 1, 0);
    for (auto m : faces) ++cnt[bit_count(m)];
    for (int s = 0; s <= topsz; ++s) size_begin[s + 1] = size_begin[s] + cnt[s];
    std::vector<int> at(size_begin.begin(), size_begin.end() - 1);
    cells.resize(faces.size());
    for (auto m : faces) cells[at[bit_count(m)]++] = m;
  }
  FaceMap map;
  map.build(cells);
  int ncells = (int)cells.size();
  std::vector<std::uint8_t> alive(ncells, 1), bd(ncells, 0);
  for (int i = 0; i < ncells; ++i) {
    int s = bit_count(cells[i]);
    bd[i] = (std::uint8_t)(s >= 2 ? s : (s == 1 ? 1 : 0));
  }
  // coreduction cascade, seeded with the vertices
  std::vector<std::int32_t> queue;
  for (int i = size_begin[1]; i < size_begin[std::min(2, topsz + 1)]; ++i)
    queue.push_back(i);
  auto on_removed = [&](std::int32_t c) {
    Mask rest = W & ~cells[c];
    for (int v : bits(rest)) {
      std::int32_t d = map.find(cells[c] | bit(v));
      if (d >= 0 && alive[d] && --bd[d] == 1) queue.push_back(d);
    }
  };
  while (!queue.empty()) {
    std::int32_t a = queue.back();
    queue.pop_back();
    if (!alive[a] || bd[a] != 1) continue;
    std::int32_t b = -1;
    if (bit_count(cells[a]) == 1) {
      b = map.find(0);
    } else {
      for (int v : bits(cells[a])) {
        std::int32_t j = map.find(cells[a] ^ bit(v));
        if (j >= 0 && alive[j]) {
          b = j;
          break;
        }
      }
    }
    if (b < 0 || !alive[b]) continue;  // stale queue entry
    alive[a] = alive[b] = 0;
    on_removed(a);
    on_removed(b);
  }

  std::vector<long long> betti(topsz + 1, 0);
  std::vector<int> nalive(topsz + 2, 0);
  bool any = false;
  for (int i = 0; i < ncells; ++i)
    if (alive[i]) {
      ++nalive[bit_count(cells[i])];
      any = true;
    }
  if (!any) return betti;  // fully collapsed: acyclic

  // leftover boundary ranks; restricted incidences keep simplicial signs
  std::vector<int> rank(topsz + 2, 0);
  for (int s = 1; s <= topsz; ++s) {
    if (nalive[s] == 0 || nalive[s - 1] == 0) continue;
    // row index for live (s-1)-cells
    std::vector<std::int32_t> rowid(ncells, -1);
    int rows = 0;
    for (int i = size_begin[s - 1]; i < size_begin[s]; ++i)
      if (alive[i]) rowid[i] = rows++;
    if (field == Field::F2) {
      std::vector<std::vector<std::uint64_t>> colsm;
      int blocks = (rows + 63) / 64;
      for (int i = size_begin[s]; i < size_begin[s + 1]; ++i) {
        if (!alive[i]) continue;
        std::vector<std::uint64_t> col(blocks, 0);
        for (int v : bits(cells[i])) {
          std::int32_t j = map.find(cells[i] ^ bit(v));
          if (j >= 0 && alive[j]) col[rowid[j] / 64] ^= std::uint64_t{1} << (rowid[j] % 64);
        }
        colsm.push_back(std::move(col));
      }
      rank[s] = rank_f2(colsm);
    } else {
      using boost::multiprecision::cpp_rational;
      std::vector<std::vector<cpp_rational>> mat(rows);
      int cols = 0;
      for (int i = size_begin[s]; i < size_begin[s + 1]; ++i)
        if (alive[i]) ++cols;
      for (auto& r : mat) r.assign(cols, 0);
      int c = 0;
      for (int i = size_begin[s]; i < size_begin[s + 1]; ++i) {
        if (!alive[i]) continue;
        int pos = 0;
        for (int v : bits(cells[i])) {
          std::int32_t j = map.find(cells[i] ^ bit(v));
          if (j >= 0 && alive[j]) mat[rowid[j]][c] = (pos % 2 == 0) ? 1 : -1;
          ++pos;
        }
        ++c;
      }
      rank[s] = rank_q(mat);
    }
  }
  for (int s = 0; s <= topsz; ++s)
    betti[s] = nalive[s] - rank[s] - rank[s + 1];
  return betti;
}

struct WPlan {
  std::uint64_t W;
  int potential;
};

// Coverage prune plus packing bound; returns false when W is skippable.
inline bool plan_for(const std::vector<Mask>& gens, Mask W, std::vector<Mask>& gens_in,
                     int* potential) {
  gens_in.clear();
  Mask covered = 0, packed = 0;
  int packing = 0;
  for (Mask g : gens)
    if ((g & W) == g) {
      gens_in.push_back(g);
      covered |= g;
      if (!(g & packed)) {
        packed |= g;
        ++packing;
      }
    }
  if (covered != W) return false;  // cone point: no reduced homology
  *potential = bit_count(W) - packing;
  return true;
}

}  // namespace detail

// Full (i, j, value) table for S/I, Hochster route.
inline BettiTable betti_table(const SqIdeal& I, HochsterOptions opt = {}) {
  Mask U = 0;
  for (Mask g : I.gens) U |= g;
  require(bit_count(U) <= 20, "betti_table: generator support <= 20 variables");

  std::vector<std::uint64_t> Ws;
  for (Mask W = U;; W = (W - 1) & U) {
    Ws.push_back(W);
    if (W == 0) break;
  }

  unsigned nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, (unsigned)Ws.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::map<std::pair<int, int>, long long>> acc(nthreads);

  auto work = [&](unsigned tid) {
    std::vector<Mask> gens_in;
    std::vector<std::uint64_t> faces;
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= Ws.size()) return;
      Mask W = Ws[k];
      int pot = 0;
      if (!detail::plan_for(I.gens, W, gens_in, &pot)) continue;
      detail::enumerate_faces(W, gens_in, faces);
      auto betti = detail::reduced_betti_faces(faces, W, opt.field);
      int j = bit_count(W);
      for (int s = 0; s < (int)betti.size(); ++s)
        if (betti[s] != 0) acc[tid][{j - s, j}] += betti[s];
    }
  };
  if (nthreads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::map<std::pair<int, int>, long long> total;
  for (auto& m : acc)
    for (auto& [k, v] : m) total[k] += v;

  BettiTable out;
  for (auto& [k, v] : total) {
    if (k.first == 0 && k.second == 0) {
      assert(v == 1);  // the quotient's beta_{0,0}; kept implicit
      continue;
    }
    out.entries.push_back({k.first, k.second, v});
    out.reg = std::max(out.reg, k.second - k.first);
    out.pd = std::max(out.pd, k.first);
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
  return out;
}

// Regularity only: potential-ordered sweep with early stop.
inline int ideal_regularity(const SqIdeal& I, HochsterOptions opt = {}) {
  Mask U = 0;
  for (Mask g : I.gens) U |= g;
  require(bit_count(U) <= 20, "regularity: generator support <= 20 variables");

  std::vector<detail::WPlan> plans;
  {
    std::vector<Mask> gens_in;
    for (Mask W = U;; W = (W - 1) & U) {
      int pot = 0;
      if (detail::plan_for(I.gens, W, gens_in, &pot) && pot > 0)
        plans.push_back({W, pot});
      if (W == 0) break;
    }
  }
  std::sort(plans.begin(), plans.end(), [](const detail::WPlan& a, const detail::WPlan& b) {
    return a.potential != b.potential ? a.potential > b.potential : a.W < b.W;
  });

  std::atomic<int> best{0};
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    std::vector<Mask> gens_in;
    std::vector<std::uint64_t> faces;
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= plans.size()) return;
      if (plans[k].potential <= best.load(std::memory_order_relaxed)) return;  // sorted: done
      int pot = 0;
      detail::plan_for(I.gens, plans[k].W, gens_in, &pot);
      detail::enumerate_faces(plans[k].W, gens_in, faces);
      auto betti = detail::reduced_betti_faces(faces, plans[k].W, opt.field);
      int contrib = 0;
      for (int s = 0; s < (int)betti.size(); ++s)
        if (betti[s] != 0) contrib = s;
      int cur = best.load(std::memory_order_relaxed);
      while (contrib > cur && !best.compare_exchange_weak(cur, contrib)) {
      }
    }
  };
  unsigned nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, std::max<std::size_t>(plans.size(), 1));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return best.load();
}

// Graph-level wrappers: invariants of S/J via the squarefree lex
// degeneration (extremal Betti data survives it).
inline BettiTable graph_betti_table(const Graph& g, HochsterOptions opt = {}) {
  require(g.n <= 10, "graph_betti_table: n <= 10");
  return betti_table(initial_ideal(g), opt);
}

inline int graph_regularity(const Graph& g, HochsterOptions opt = {}) {
  require(g.n <= 10, "graph_regularity: n <= 10");
  return ideal_regularity(initial_ideal(g), opt);
}

// Helper for homology unit tests: complex given by its facets.
inline std::vector<long long> simplicial_reduced_betti(const std::vector<Mask>& facets,
                                                       Field field) {
  Mask U = 0;
  for (Mask f : facets) U |= f;
  std::vector<std::uint64_t> faces;
  std::set<std::uint64_t> seen;
  // downward closure
  std::function<void(Mask)> close = [&](Mask f) {
    if (!seen.insert(f).second) return;
    for (int v : bits(f)) close(f ^ bit(v));
  };
  for (Mask f : facets) close(f);
  faces.assign(seen.begin(), seen.end());
  return detail::reduced_betti_faces(faces, U, field);
}

}  // namespace bei
