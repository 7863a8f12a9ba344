#pragma once

// JSON views of the core results. Vertex labels are 1-based in all output,
// matching the text formats. Emission is deterministic: keys are sorted and
// nothing volatile (timing, pointers) is ever included.

#include <string>
#include <vector>

#include "json.hpp"

#include "bei/checks.hpp"
#include "bei/graph.hpp"
#include "bei/hilbert.hpp"
#include "bei/hochster.hpp"
#include "bei/interval.hpp"
#include "bei/primes.hpp"
#include "bei/sweep.hpp"

namespace bei {

using json = nlohmann::json;

inline json mask_to_json(Mask m) {
  json a = json::array();
  for (int v : bits(m)) a.push_back(v + 1);
  return a;
}

inline json prime_to_json(const MinimalPrime& p) {
  json comps = json::array();
  for (Mask c : p.comps) comps.push_back(mask_to_json(c));
  return json{{"T", mask_to_json(p.T)}, {"components", comps}};
}

inline json primes_to_json(const std::vector<MinimalPrime>& ps, int krull) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(prime_to_json(p));
  return json{{"krull", krull}, {"primes", arr}};
}

inline json betti_to_json(const BettiTable& bt) {
  json arr = json::array();
  for (const auto& e : bt.entries)
    arr.push_back(json::array({e.i, e.j, e.value}));
  return json{{"betti", arr}, {"reg", bt.reg}};
}

inline json hpoly_to_json(const HPoly& hp) {
  return json{{"h", hp.h}, {"dim", hp.dim}};
}

inline json intervals_to_json(const std::vector<Interval>& iv) {
  json arr = json::array();
  for (const auto& i : iv)
    arr.push_back(json{{"label", i.label},
                       {"lo", write_endpoint(i.lo)},
                       {"hi", write_endpoint(i.hi)}});
  return arr;
}

inline json certificate_to_json(const InducedPathCertificate& cert) {
  json paths = json::array();
  for (const auto& p : cert.paths) {
    json one = json::array();
    for (int v : p) one.push_back(v + 1);
    paths.push_back(one);
  }
  return json{{"L", cert.total}, {"paths", paths}};
}

inline json check_to_json(const CheckResult& r) {
  json j{{"id", r.id}, {"verdict", r.verdict}, {"values", r.values}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json checks_to_json(const std::vector<CheckResult>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(check_to_json(r));
  return json{{"checks", arr}, {"ok", checks_pass(rs)}};
}

inline json sweep_to_json(const SweepReport& rep, bool per_graph = true) {
  json j{{"family", rep.family},
         {"enumerated", rep.enumerated},
         {"checked", rep.checked},
         {"failures", rep.failures()},
         {"ok", rep.ok()},
         {"tally", rep.tally}};
  if (per_graph) {
    json arr = json::array();
    for (const auto& g : rep.graphs) {
      json checks = json::array();
      for (const auto& r : g.results) checks.push_back(check_to_json(r));
      arr.push_back(json{{"graph6", g.key},
                         {"n", g.n},
                         {"multiplicity", g.multiplicity},
                         {"checks", checks}});
    }
    j["graphs"] = arr;
  }
  return j;
}

inline json limits_to_json(const LimitTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    std::string r1 = std::to_string(r.c) + "/" + std::to_string(r.deg_h);
    std::string r2 = std::to_string(r.c) + "/" + std::to_string(r.n_minus_2);
    rows.push_back(json{{"t", r.t},
                        {"c", r.c},
                        {"deg_h", r.deg_h},
                        {"n_minus_2", r.n_minus_2},
                        {"c_over_deg_h", r1},
                        {"c_over_n_minus_2", r2}});
  }
  return json{{"m", t.m},
              {"rows", rows},
              {"strictly_decreasing", t.ratios_strictly_decreasing()}};
}

}  // namespace bei
