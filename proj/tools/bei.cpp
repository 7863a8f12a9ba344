// Command-line surface. Input graphs are edge-list text (first line n, then
// one "u v" per line, 1-based) or graph6; "-" reads standard input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bei/chordal.hpp"
#include "bei/checks.hpp"
#include "bei/cliques.hpp"
#include "bei/graph.hpp"
#include "bei/hilbert.hpp"
#include "bei/hochster.hpp"
#include "bei/induced_path.hpp"
#include "bei/interval.hpp"
#include "bei/json_io.hpp"
#include "bei/primes.hpp"
#include "bei/sweep.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

bei::Graph load_graph(const std::string& path) {
  return bei::parse_graph_text(slurp(path));
}

std::string label_list(bei::Mask m) {
  std::string s;
  for (int v : bei::bits(m)) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s.empty() ? "-" : s;
}

std::string path_str(const std::vector<int>& p) {
  std::string s;
  for (int v : p) {
    if (!s.empty()) s += '-';
    s += std::to_string(v + 1);
  }
  return s;
}

void print_checks(const std::vector<bei::CheckResult>& rs) {
  for (const auto& r : rs) {
    std::ostringstream vals;
    for (const auto& [k, v] : r.values) vals << ' ' << k << '=' << v;
    std::cout << "  " << r.id << ": " << r.verdict << vals.str();
    if (!r.note.empty()) std::cout << "  (" << r.note << ")";
    std::cout << "\n";
  }
}

int cmd_invariants(const std::string& file, bool as_json) {
  bei::Graph g = load_graph(file);
  bool chordal = bei::is_chordal(g);
  auto cliques = bei::maximal_cliques(g);
  auto cert = bei::longest_induced_path_length(g);
  bei::Mask freev = bei::free_vertices(g);
  if (as_json) {
    bei::json cl = bei::json::array();
    for (bei::Mask c : cliques) cl.push_back(bei::mask_to_json(c));
    bei::json j{{"n", g.n},
                {"edges", g.edge_count()},
                {"connected", bei::is_connected(g)},
                {"chordal", chordal},
                {"c", (long long)cliques.size()},
                {"L", cert.total},
                {"induced_paths", bei::certificate_to_json(cert)["paths"]},
                {"free_vertices", bei::mask_to_json(freev)},
                {"maximal_cliques", cl}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n: " << g.n << "\nedges: " << g.edge_count()
            << "\nconnected: " << (bei::is_connected(g) ? "yes" : "no")
            << "\nchordal: " << (chordal ? "yes" : "no")
            << "\nc: " << cliques.size() << "\nL: " << cert.total << "\n";
  for (const auto& p : cert.paths)
    std::cout << "  induced path: " << path_str(p) << "\n";
  std::cout << "free vertices: " << label_list(freev) << "\n";
  for (bei::Mask c : cliques)
    std::cout << "  maximal clique: " << label_list(c) << "\n";
  return 0;
}

int cmd_regularity(const std::string& file, const std::string& field,
                   bool as_json) {
  bei::Graph g = load_graph(file);
  bei::HochsterOptions opt;
  opt.field = field == "q" ? bei::Field::Q : bei::Field::F2;
  auto bt = bei::graph_betti_table(g, opt);
  if (as_json) {
    std::cout << bei::betti_to_json(bt).dump(2) << "\n";
    return 0;
  }
  std::cout << "field: " << (opt.field == bei::Field::Q ? "Q" : "F2") << "\n";
  for (const auto& e : bt.entries)
    std::cout << "  beta(" << e.i << "," << e.j << ") = " << e.value << "\n";
  std::cout << "reg: " << bt.reg << "\npd: " << bt.pd << "\n";
  return 0;
}

int cmd_recognize(const std::string& file, bool as_json) {
  bei::Graph g = load_graph(file);
  bool chordal = bei::is_chordal(g);
  int L = bei::induced_path_length(g);
  int c = bei::clique_count(g);
  bool si = bei::is_strongly_interval(g);
  std::vector<std::pair<std::vector<int>, std::vector<bei::Interval>>> reps;
  if (si) {
    for (bei::Mask comp : bei::components(g, g.vmask())) {
      std::vector<int> labels;
      for (int v : bei::bits(comp)) labels.push_back(v);
      bei::Graph h = bei::induced_subgraph(g, comp);
      auto rep = bei::interval_representation(h);
      for (std::size_t v = 0; v < rep.size(); ++v)
        rep[v].label = std::to_string(labels[v] + 1);
      reps.push_back({labels, rep});
    }
  }
  if (as_json) {
    bei::json j{{"strongly_interval", si},
                {"chordal", chordal},
                {"L", L},
                {"c", c}};
    if (si) {
      bei::json comps = bei::json::array();
      for (const auto& [labels, rep] : reps)
        comps.push_back(bei::intervals_to_json(rep));
      j["representations"] = comps;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "strongly interval: " << (si ? "yes" : "no")
            << "\nchordal: " << (chordal ? "yes" : "no") << "\nL: " << L
            << "\nc: " << c << "\n";
  for (const auto& [labels, rep] : reps) {
    std::cout << "representation:\n";
    for (const auto& iv : rep)
      std::cout << "  " << iv.label << " [" << bei::write_endpoint(iv.lo)
                << ", " << bei::write_endpoint(iv.hi) << "]\n";
  }
  return 0;
}

int cmd_hilbert(const std::string& file, bool as_json) {
  bei::Graph g = load_graph(file);
  auto hp = bei::graph_hilbert_series(g);
  int krull = bei::krull_dimension(g);
  if (hp.dim != krull)
    throw std::logic_error("hilbert: pole order " + std::to_string(hp.dim) +
                           " != krull dimension " + std::to_string(krull));
  if (as_json) {
    std::cout << bei::hpoly_to_json(hp).dump(2) << "\n";
    return 0;
  }
  std::cout << "h:";
  for (long long c : hp.h) std::cout << ' ' << c;
  std::cout << "\ndim: " << hp.dim << "\ndeg h: " << hp.degree() << "\n";
  return 0;
}

int cmd_primes(const std::string& file, bool as_json) {
  bei::Graph g = load_graph(file);
  auto ps = bei::minimal_primes(g);
  int krull = bei::krull_dimension(g);
  if (as_json) {
    std::cout << bei::primes_to_json(ps, krull).dump(2) << "\n";
    return 0;
  }
  for (const auto& p : ps) {
    std::cout << "T = {" << label_list(p.T) << "}  dim " << p.dim
              << "  components:";
    for (bei::Mask c : p.comps) std::cout << " {" << label_list(c) << "}";
    std::cout << "\n";
  }
  std::cout << "minimal primes: " << ps.size() << "\nkrull: " << krull << "\n";
  return 0;
}

int cmd_verify(const std::string& file, std::vector<std::string> ids,
               bool as_json) {
  bei::Graph g = load_graph(file);
  auto rs = bei::run_checks(g, ids);
  if (as_json) {
    std::cout << bei::checks_to_json(rs).dump(2) << "\n";
  } else {
    print_checks(rs);
    std::cout << (bei::checks_pass(rs) ? "all checks pass" : "CHECK FAILURES")
              << "\n";
  }
  return bei::checks_pass(rs) ? 0 : 1;
}

int cmd_sweep(const std::string& mode, int n, int count, std::uint64_t seed,
              std::vector<std::string> ids, bool no_dedup, bool per_graph,
              bool as_json) {
  bei::SweepOptions opt;
  opt.checks = std::move(ids);
  opt.dedup = !no_dedup;
  bei::SweepReport rep;
  if (mode == "exhaustive")
    rep = bei::sweep_exhaustive(n, opt);
  else if (mode == "random")
    rep = bei::sweep_random(n, count, seed, opt);
  else
    throw std::runtime_error("unknown sweep mode: " + mode);
  if (as_json) {
    std::cout << bei::sweep_to_json(rep, per_graph).dump(2) << "\n";
  } else {
    std::cout << "family: " << rep.family
              << "\nenumerated: " << rep.enumerated
              << "\nchecked: " << rep.checked << "\n";
    for (const auto& [id, vs] : rep.tally) {
      std::cout << "  " << id << ":";
      for (const auto& [v, k] : vs) std::cout << ' ' << v << '=' << k;
      std::cout << "\n";
    }
    if (per_graph)
      for (const auto& gr : rep.graphs) {
        std::cout << gr.key << " (n=" << gr.n << ", x" << gr.multiplicity
                  << ")\n";
        print_checks(gr.results);
      }
    std::cout << "failures: " << rep.failures() << "\nwall: " << rep.seconds
              << "s\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_limits(int m, int tmax, bool as_json) {
  auto table = bei::joint_limit_table(m, tmax);
  if (as_json) {
    std::cout << bei::limits_to_json(table).dump(2) << "\n";
  } else {
    std::cout << "t\tc\tdeg h\tn-2\tc/deg h\tc/(n-2)\n";
    for (const auto& r : table.rows)
      std::cout << r.t << '\t' << r.c << '\t' << r.deg_h << '\t'
                << r.n_minus_2 << '\t' << r.c << '/' << r.deg_h << '\t'
                << r.c << '/' << r.n_minus_2 << "\n";
    std::cout << "strictly decreasing: "
              << (table.ratios_strictly_decreasing() ? "yes" : "no") << "\n";
  }
  return table.ratios_strictly_decreasing() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of binomial edge ideals"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "edge-list or graph6 file, - for stdin")
        ->required();
  };

  auto* inv = app.add_subcommand("invariants", "c, L, cliques, free vertices");
  add_file(inv);

  auto* reg = app.add_subcommand("regularity", "Betti table and regularity");
  add_file(reg);
  std::string field = "f2";
  reg->add_option("--field", field, "homology coefficients")
      ->check(CLI::IsMember({"f2", "q"}));

  auto* rec = app.add_subcommand("recognize", "strongly interval recognition");
  add_file(rec);

  auto* hil = app.add_subcommand("hilbert", "h-polynomial and dimension");
  add_file(hil);

  auto* pri = app.add_subcommand("primes", "minimal primes and dimension");
  add_file(pri);

  auto* ver = app.add_subcommand("verify", "run the check catalog");
  add_file(ver);
  std::vector<std::string> ids;
  ver->add_option("--checks", ids, "subset of check ids")->delimiter(',');

  auto* swp = app.add_subcommand("sweep", "check a graph family");
  std::string mode = "exhaustive";
  int swp_n = 4, swp_count = 10;
  std::uint64_t swp_seed = 1;
  bool no_dedup = false, per_graph = false;
  std::vector<std::string> swp_ids;
  swp->add_option("--mode", mode, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  swp->add_option("--n", swp_n, "vertex count (exhaustive: all sizes up to n)");
  swp->add_option("--count", swp_count, "random mode: number of graphs");
  swp->add_option("--seed", swp_seed, "random mode: generator seed");
  swp->add_option("--checks", swp_ids, "subset of check ids")->delimiter(',');
  swp->add_flag("--no-dedup", no_dedup,
                "exhaustive mode: keep every labeled instance (slow)");
  swp->add_flag("--per-graph", per_graph, "include per-graph results");

  auto* lim = app.add_subcommand("limits", "join-family ratio table");
  int lim_m = 4, lim_tmax = 6;
  lim->add_option("--m", lim_m, "path length parameter (>= 3)");
  lim->add_option("--tmax", lim_tmax, "largest t");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(file, as_json);
    if (reg->parsed()) return cmd_regularity(file, field, as_json);
    if (rec->parsed()) return cmd_recognize(file, as_json);
    if (hil->parsed()) return cmd_hilbert(file, as_json);
    if (pri->parsed()) return cmd_primes(file, as_json);
    if (ver->parsed()) return cmd_verify(file, ids, as_json);
    if (swp->parsed())
      return cmd_sweep(mode, swp_n, swp_count, swp_seed, swp_ids, no_dedup,
                       per_graph, as_json);
    if (lim->parsed()) return cmd_limits(lim_m, lim_tmax, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
