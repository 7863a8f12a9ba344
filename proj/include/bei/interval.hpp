#pragma once

// Interval representations with exact rational endpoints. Construction for
// connected chordal graphs whose longest induced path length equals the
// number of maximal cliques: backbone J_0=[0], J_t=[t-1,t] along a longest
// induced path, off-path intervals [a_u, d_u-1+2^-(r-i+1)] read off from the
// maximal cliques containing consecutive path edges.

#include <numeric>
#include <string>
#include <vector>

#include "bei/chordal.hpp"
#include "bei/cliques.hpp"
#include "bei/induced_path.hpp"
#include "bei/graph.hpp"

namespace bei {

struct Rat {
  long long num = 0, den = 1;  // den > 0, reduced

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  static Rat of(long long n, long long d) {
    require(d != 0, "rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r; r.num = n; r.den = d; return r;
  }

  friend Rat operator+(Rat a, Rat b) {
    return of(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(Rat a, Rat b) {
    return of(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(Rat a, Rat b) { return !(b < a); }

  bool is_integer() const { return den == 1; }
};

inline Rat rat_min(Rat a, Rat b) { return a < b ? a : b; }
inline Rat rat_max(Rat a, Rat b) { return a < b ? b : a; }

// endpoint text: integers plain, dyadics num/2^p, anything else num/den
inline std::string write_endpoint(Rat r) {
  if (r.den == 1) return std::to_string(r.num);
  if ((r.den & (r.den - 1)) == 0) {
    int p = std::countr_zero((unsigned long long)r.den);
    return std::to_string(r.num) + "/2^" + std::to_string(p);
  }
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline Rat parse_endpoint(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(tok));
  long long num = std::stoll(tok.substr(0, slash));
  std::string d = tok.substr(slash + 1);
  if (d.rfind("2^", 0) == 0) {
    int p = std::stoi(d.substr(2));
    require(p >= 0 && p < 62, "endpoint: exponent out of range");
    return Rat::of(num, 1LL << p);
  }
  return Rat::of(num, std::stoll(d));
}

struct Interval {
  std::string label;
  Rat lo, hi;
};

inline bool intervals_meet(const Interval& a, const Interval& b) {
  return rat_max(a.lo, b.lo) <= rat_min(a.hi, b.hi);
}

// Intersection graph; vertex i is intervals[i].
inline Graph realize_intervals(const std::vector<Interval>& iv) {
  require(!iv.empty() && iv.size() <= 64, "realize: need 1..64 intervals");
  for (const auto& i : iv) require(i.lo <= i.hi, "realize: empty interval");
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      if (intervals_meet(iv[i], iv[j])) e.emplace_back((int)i, (int)j);
  return build_graph((int)iv.size(), e);
}

// Lines "label lo hi".
inline std::string write_intervals(const std::vector<Interval>& iv) {
  std::string out;
  for (const auto& i : iv)
    out += i.label + " " + write_endpoint(i.lo) + " " + write_endpoint(i.hi) + "\n";
  return out;
}

inline std::vector<Interval> parse_intervals(std::istream& in) {
  std::vector<Interval> iv;
  std::string label, lo, hi;
  while (in >> label >> lo >> hi)
    iv.push_back({label, parse_endpoint(lo), parse_endpoint(hi)});
  return iv;
}

// Backbone of length k plus extra intervals with natural left endpoints,
// contained in [0,k) — the defining family shape. Backbone vertices first.
inline Graph generate_strongly_interval(int k, const std::vector<Interval>& extras) {
  require(k >= 1, "generate: k >= 1");
  std::vector<Interval> iv;
  iv.push_back({"1", Rat(0), Rat(0)});
  for (int t = 1; t <= k; ++t)
    iv.push_back({std::to_string(t + 1), Rat(t - 1), Rat(t)});
  for (const auto& ex : extras) {
    require(ex.lo.is_integer() && 0 <= ex.lo.num, "generate: extra lo must be in N_0");
    require(ex.lo <= ex.hi && ex.hi < Rat(k), "generate: extra must sit inside [0,k)");
    iv.push_back(ex);
  }
  return realize_intervals(iv);
}

// Recognition: every connected component chordal with L == c.
inline bool is_strongly_interval(const Graph& g) {
  // Component-wise: each component must be a connected strongly interval
  // graph, i.e. chordal with L == c. A single vertex fails (L=0 < 1=c):
  // every realization has at least the two backbone intervals J_0, J_1.
  for (Mask comp : components(g, g.vmask())) {
    Graph h = induced_subgraph(g, comp);
    if (!is_chordal(h)) return false;
    if (induced_path_length(h) != clique_count(h)) return false;
  }
  return true;
}

// Representation for a connected witness; intervals[v] belongs to vertex v.
inline std::vector<Interval> interval_representation(const Graph& g) {
  require(is_connected(g), "representation: graph must be connected");
  require(is_chordal(g), "representation: graph must be chordal");
  auto path = longest_induced_path(g);
  auto cliq = maximal_cliques_chordal(g);
  int ell = path.length;
  require(ell == (int)cliq.size(), "representation: needs L == c");

  std::vector<Interval> iv(g.n);
  Mask onpath = 0;
  for (int t = 0; t <= ell; ++t) {
    int v = path.vertices[t];
    onpath |= bit(v);
    iv[v].label = std::to_string(v + 1);
    iv[v].lo = Rat(std::max(t - 1, 0));
    iv[v].hi = Rat(t);
  }
  require(ell >= 1, "representation: single-vertex graph has L=0 < c=1");

  // F_t: the unique maximal clique containing path edge {v_t, v_{t+1}}.
  std::vector<Mask> F(ell);
  for (int t = 0; t < ell; ++t) {
    Mask edge = bit(path.vertices[t]) | bit(path.vertices[t + 1]);
    int hits = 0;
    for (Mask c : cliq)
      if ((c & edge) == edge) { F[t] = c; ++hits; }
    if (hits != 1) throw std::logic_error("representation: path edge in several maximal cliques");
  }

  // Off-path vertices, ordered by (first clique index, id); the i-th gets
  // right-end fraction 2^-(r-i+1) so later intervals stretch further.
  struct Off { int a, d, v; };
  std::vector<Off> off;
  for (int v : bits(g.vmask() & ~onpath)) {
    int a = -1, d = -1;
    for (int t = 0; t < ell; ++t)
      if (F[t] & bit(v)) {
        if (a < 0) a = t;
        d = t + 1;
      }
    if (a < 0) throw std::logic_error("representation: vertex in no path-edge clique");
    for (int t = a; t <= d - 1; ++t)
      if (!(F[t] & bit(v))) throw std::logic_error("representation: clique range not consecutive");
    off.push_back({a, d, v});
  }
  std::sort(off.begin(), off.end(), [](const Off& x, const Off& y) {
    return x.a != y.a ? x.a < y.a : x.v < y.v;
  });
  int r = (int)off.size();
  require(r < 60, "representation: too many off-path vertices");
  for (int i = 0; i < r; ++i) {
    const Off& o = off[i];
    iv[o.v].label = std::to_string(o.v + 1);
    iv[o.v].lo = Rat(o.a);
    iv[o.v].hi = Rat(o.d - 1) + Rat::of(1, 1LL << (r - i));
  }

  if (!(realize_intervals(iv) == g))
    throw std::logic_error("representation: realization mismatch");
  return iv;
}

}  // namespace bei
