#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "burnlab/burn.hpp"
#include "burnlab/closed_form.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/family.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/percolation.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/verify.hpp"

namespace {

using namespace burnlab;

Graph load_graph(const std::string& graph_path, const std::string& family_spec) {
  if (!graph_path.empty() && !family_spec.empty())
    throw std::invalid_argument("give either --graph or --family, not both");
  if (!graph_path.empty()) {
    std::ifstream in(graph_path);
    if (!in) throw std::invalid_argument("cannot open " + graph_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return Graph::from_edge_list(buf.str());
  }
  if (!family_spec.empty()) return generate(FamilySpec::parse(family_spec));
  throw std::invalid_argument("need --graph FILE or --family SPEC");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad integer in list: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot write " + out_path);
  f << text;
}

std::string range_str(const ValueRange& r) { return r.str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact laboratory for threshold burning and bootstrap percolation"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- simulate --------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "replay one source sequence");
  std::string sim_graph, sim_family, sim_seq, sim_out, sim_format = "csv";
  int sim_r = 2, sim_max_rounds = -1;
  sim->add_option("--graph", sim_graph, "edge-list file");
  sim->add_option("--family", sim_family, "family spec, e.g. wheel:30");
  sim->add_option("--seq", sim_seq, "comma-separated source vertices")->required();
  sim->add_option("--r", sim_r, "spread threshold (default 2)");
  sim->add_option("--max-rounds", sim_max_rounds, "treat longer runs as failures");
  sim->add_option("--format", sim_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--out", sim_out, "write the result here instead of stdout");
  sim->callback([&] {
    Graph g = load_graph(sim_graph, sim_family);
    BurnSequence seq{parse_int_list(sim_seq), sim_r};
    BurnTrace tr = simulate(g, seq);
    bool done = tr.outcome == BurnOutcome::completed;
    bool within = sim_max_rounds < 0 || tr.final_round <= sim_max_rounds;

    std::ostringstream out;
    if (sim_format == "json") {
      nlohmann::ordered_json doc;
      doc["outcome"] = done ? "completed" : "stalled";
      doc["final_round"] = tr.final_round;
      doc["consumed"] = tr.consumed;
      doc["rounds"] = nlohmann::ordered_json::array();
      for (size_t j = 1; j < tr.rounds.size(); ++j) {
        std::vector<int> fresh;
        for (Bits m = tr.rounds[j] & ~tr.rounds[j - 1]; m; m &= m - 1)
          fresh.push_back(lowest_bit(m));
        doc["rounds"].push_back(fresh);
      }
      out << doc.dump(2) << "\n";
    } else {
      for (size_t j = 1; j < tr.rounds.size(); ++j) {
        out << "round " << j << ":";
        for (Bits m = tr.rounds[j] & ~tr.rounds[j - 1]; m; m &= m - 1)
          out << ' ' << g.vertex_name(lowest_bit(m));
        out << "\n";
      }
      if (done)
        out << "completed rd=" << tr.final_round << " consumed=" << tr.consumed
            << "\n";
      else
        out << "stalled round=" << tr.final_round << " consumed=" << tr.consumed
            << "\n";
      if (!done && sim_r == 2) {
        for (const auto& v : necessity_check(g, seq)) {
          if (v.kind == NecessityViolation::Kind::leaf_unsourced)
            out << "hint: leaf " << g.vertex_name(v.u) << " is never a source\n";
          else
            out << "hint: adjacent degree-2 pair " << g.vertex_name(v.u) << ","
                << g.vertex_name(v.v) << " has no source\n";
        }
      }
      if (done && !within)
        out << "exceeds --max-rounds=" << sim_max_rounds << "\n";
    }
    emit(sim_out, out.str());
    exit_code = (done && within) ? 0 : 2;
  });

  // ---- solve -----------------------------------------------------------
  auto* sol = app.add_subcommand("solve", "exact minimum rounds and sources");
  std::string sol_graph, sol_family, sol_out, sol_format = "csv";
  int sol_r = 2, sol_max_rounds = -1, sol_max_vertices = 30;
  bool sol_stats = false;
  sol->add_option("--graph", sol_graph, "edge-list file");
  sol->add_option("--family", sol_family, "family spec");
  sol->add_option("--r", sol_r, "spread threshold (default 2)");
  sol->add_option("--max-rounds", sol_max_rounds,
                  "round budget; exceeding it reports unknown");
  sol->add_option("--max-vertices", sol_max_vertices,
                  "refuse larger instances (default 30)");
  sol->add_flag("--stats", sol_stats, "print node and memo counters");
  sol->add_option("--format", sol_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sol->add_option("--out", sol_out, "write the result here instead of stdout");
  sol->callback([&] {
    Graph g = load_graph(sol_graph, sol_family);
    SolveOptions opts;
    opts.threshold = sol_r;
    opts.max_rounds = sol_max_rounds;
    opts.max_vertices = sol_max_vertices;
    auto rb = burning_number(g, opts);
    std::ostringstream out;
    std::string bq = "b" + std::to_string(sol_r);
    std::string tq = "t" + std::to_string(sol_r);
    if (!rb.value) {
      if (sol_format == "json") {
        nlohmann::ordered_json doc;
        doc[bq] = nullptr;
        doc["max_rounds"] = sol_max_rounds;
        out << doc.dump(2) << "\n";
      } else {
        out << bq << "=unknown within max-rounds=" << sol_max_rounds << "\n";
      }
      emit(sol_out, out.str());
      exit_code = 2;
      return;
    }
    auto rt = source_number(g, *rb.value, opts);
    if (sol_format == "json") {
      nlohmann::ordered_json doc;
      doc[bq] = *rb.value;
      doc[tq] = rt.value ? nlohmann::ordered_json(*rt.value)
                         : nlohmann::ordered_json(nullptr);
      doc["round_witness"] = rb.witness.sources;
      doc["source_witness"] = rt.witness.sources;
      if (sol_stats) {
        doc["nodes"] = rb.stats.nodes + rt.stats.nodes;
        doc["memo_hits"] = rb.stats.memo_hits + rt.stats.memo_hits;
      }
      out << doc.dump(2) << "\n";
    } else {
      out << bq << "=" << *rb.value << " " << tq << "="
          << (rt.value ? std::to_string(*rt.value) : std::string("unknown"))
          << "\n";
      out << "round-witness=" << join_ints(rb.witness.sources) << "\n";
      out << "source-witness=" << join_ints(rt.witness.sources) << "\n";
      if (sol_stats)
        out << "nodes=" << rb.stats.nodes + rt.stats.nodes
            << " memo-hits=" << rb.stats.memo_hits + rt.stats.memo_hits << "\n";
    }
    emit(sol_out, out.str());
  });

  // ---- family ----------------------------------------------------------
  auto* fam = app.add_subcommand("family", "closed-form values and witnesses");
  std::string fam_spec, fam_out, fam_format = "csv";
  bool fam_emit_graph = false;
  fam->add_option("--spec", fam_spec, "family spec, e.g. spider:3,1,1")->required();
  fam->add_flag("--emit-graph", fam_emit_graph, "print the edge list instead");
  fam->add_option("--format", fam_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  fam->add_option("--out", fam_out, "write the result here instead of stdout");
  fam->callback([&] {
    FamilySpec spec = FamilySpec::parse(fam_spec);
    Graph g = generate(spec);
    if (fam_emit_graph) {
      emit(fam_out, g.to_edge_list());
      return;
    }
    FamilyAnswer ans = closed_form(spec);
    bool replay_ok = true;
    std::optional<BurnTrace> tr;
    if (ans.witness) {
      tr = simulate(g, *ans.witness);
      replay_ok = tr->outcome == BurnOutcome::completed &&
                  tr->final_round <= ans.b2.hi &&
                  static_cast<int>(ans.witness->sources.size()) <= ans.t2.hi;
    }
    std::ostringstream out;
    if (fam_format == "json") {
      nlohmann::ordered_json doc;
      doc["spec"] = spec.to_string();
      doc["n"] = g.vertex_count();
      doc["b2"] = {{"lo", ans.b2.lo}, {"hi", ans.b2.hi}};
      doc["t2"] = {{"lo", ans.t2.lo}, {"hi", ans.t2.hi}};
      doc["note"] = ans.note;
      if (ans.witness) {
        doc["witness"] = ans.witness->sources;
        doc["witness_rd"] = tr->rd() ? nlohmann::ordered_json(*tr->rd())
                                     : nlohmann::ordered_json(nullptr);
        doc["witness_ok"] = replay_ok;
      }
      out << doc.dump(2) << "\n";
    } else {
      out << "spec=" << spec.to_string() << " n=" << g.vertex_count() << "\n";
      out << "b2=" << range_str(ans.b2) << " t2=" << range_str(ans.t2) << "\n";
      out << "note: " << ans.note << "\n";
      if (ans.witness) {
        out << "witness=" << join_ints(ans.witness->sources) << " replay="
            << (tr->rd() ? "rd " + std::to_string(*tr->rd()) : std::string("stalled"))
            << (replay_ok ? " ok" : " MISMATCH") << "\n";
      }
    }
    emit(fam_out, out.str());
    if (!replay_ok) exit_code = 3;
  });

  // ---- percolate -------------------------------------------------------
  auto* perc = app.add_subcommand("percolate", "bootstrap percolation quantities");
  std::string perc_graph, perc_family, perc_seeds, perc_out, perc_format = "csv";
  int perc_r = 2, perc_max_vertices = 25;
  bool perc_min = false, perc_sandwich = false;
  perc->add_option("--graph", perc_graph, "edge-list file");
  perc->add_option("--family", perc_family, "family spec");
  perc->add_option("--seeds", perc_seeds, "comma-separated seed set to run");
  perc->add_flag("--min", perc_min, "search the minimum percolating set");
  perc->add_flag("--sandwich", perc_sandwich,
                 "check m <= t2 <= b2 <= m+tau on this graph");
  perc->add_option("--r", perc_r, "spread threshold (default 2)");
  perc->add_option("--max-vertices", perc_max_vertices,
                   "refuse subset search beyond this (default 25)");
  perc->add_option("--format", perc_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  perc->add_option("--out", perc_out, "write the result here instead of stdout");
  perc->callback([&] {
    Graph g = load_graph(perc_graph, perc_family);
    int modes = (!perc_seeds.empty()) + perc_min + perc_sandwich;
    if (modes != 1)
      throw std::invalid_argument("pick exactly one of --seeds, --min, --sandwich");
    std::ostringstream out;
    if (!perc_seeds.empty()) {
      auto round = percolate(g, parse_int_list(perc_seeds), perc_r);
      if (perc_format == "json") {
        nlohmann::ordered_json doc;
        doc["percolates"] = round.has_value();
        doc["round"] = round ? nlohmann::ordered_json(*round)
                             : nlohmann::ordered_json(nullptr);
        out << doc.dump(2) << "\n";
      } else if (round) {
        out << "percolates round=" << *round << "\n";
      } else {
        out << "stuck: closure misses some vertices\n";
      }
      emit(perc_out, out.str());
      if (!round) exit_code = 2;
      return;
    }
    if (perc_min) {
      PercolationOptions popts;
      popts.threshold = perc_r;
      popts.max_vertices = perc_max_vertices;
      auto res = min_percolating(g, popts);
      if (perc_format == "json") {
        nlohmann::ordered_json doc;
        doc["m"] = res.m;
        doc["tau"] = res.tau;
        doc["witness"] = res.witness_set;
        out << doc.dump(2) << "\n";
      } else {
        out << "m=" << res.m << " tau=" << res.tau
            << " set=" << join_ints(res.witness_set) << "\n";
      }
      emit(perc_out, out.str());
      return;
    }
    if (perc_r != 2)
      throw std::invalid_argument("--sandwich is defined for threshold 2");
    PercolationOptions popts;
    popts.max_vertices = perc_max_vertices;
    auto rep = sandwich_check(g, popts);
    if (perc_format == "json") {
      nlohmann::ordered_json doc;
      doc["m"] = rep.m;
      doc["t2"] = rep.t2;
      doc["b2"] = rep.b2;
      doc["m_plus_tau"] = rep.m + rep.tau;
      doc["holds"] = rep.holds;
      out << doc.dump(2) << "\n";
    } else {
      out << "m=" << rep.m << " t2=" << rep.t2 << " b2=" << rep.b2
          << " m+tau=" << rep.m + rep.tau
          << " holds=" << (rep.holds ? "yes" : "NO") << "\n";
    }
    emit(perc_out, out.str());
    if (!rep.holds) exit_code = 3;
  });

  // ---- verify ----------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "closed forms against the solver");
  std::string ver_suite, ver_out, ver_format = "csv";
  VerifyOptions vopts;
  ver->add_option("--suite", ver_suite, "paths|cycles|spiders|wheels|coronas|products|percolation|all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-n", vopts.max_n, "suite size cap (0 = default)");
  ver->add_option("--max-vertices", vopts.max_n,
                  "alias for --max-n (spider total vertices)");
  ver->add_option("--jobs", vopts.jobs, "worker threads (default 1)");
  ver->add_option("--seed", vopts.seed, "seed for randomized rows");
  ver->add_option("--random-count", vopts.random_count,
                  "random sandwich instances (default 200)");
  ver->add_flag("--timings", vopts.timings,
                "fill wall_ms (makes reports run-dependent)");
  ver->add_option("--format", ver_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  ver->add_option("--out", ver_out, "write the report here instead of stdout");
  ver->callback([&] {
    VerifyReport report = run_suite(ver_suite, vopts);
    emit(ver_out, ver_format == "json" ? to_json(report) : to_csv(report));
    std::cerr << "suite=" << report.suite << " seed=" << report.seed
              << " rows=" << report.rows.size()
              << " disagreements=" << report.disagreements() << "\n";
    if (report.disagreements() > 0) exit_code = 3;
  });

  // ---- grid ------------------------------------------------------------
  auto* grid = app.add_subcommand("grid", "square grid round counts against bounds");
  std::string grid_out, grid_format = "csv";
  int grid_min = 2, grid_max = 4, grid_cap = 30;
  grid->add_option("--min-n", grid_min, "first side length (default 2)");
  grid->add_option("--max-n", grid_max, "last side length (default 4)");
  grid->add_option("--max-vertices", grid_cap,
                   "solve exactly up to this many vertices (default 30)");
  grid->add_option("--format", grid_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  grid->add_option("--out", grid_out, "write the result here instead of stdout");
  grid->callback([&] {
    if (grid_min < 2 || grid_max < grid_min)
      throw std::invalid_argument("need 2 <= min-n <= max-n");
    std::ostringstream out;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool bad = false;
    for (int n = grid_min; n <= grid_max; ++n) {
      std::optional<int> exact;
      if (n * n <= grid_cap) {
        FamilySpec side;
        side.kind = FamilyKind::path;
        side.params = {n};
        FamilySpec spec;
        spec.kind = FamilyKind::cartesian;
        spec.children = {side, side};
        SolveOptions opts;
        opts.max_vertices = grid_cap;
        auto rb = burning_number(generate(spec), opts);
        exact = rb.value;
      }
      bool ok = !exact || (n <= *exact && *exact <= 2 * n);
      if (!ok) bad = true;
      if (grid_format == "json") {
        nlohmann::ordered_json row;
        row["n"] = n;
        row["b2"] = exact ? nlohmann::ordered_json(*exact)
                          : nlohmann::ordered_json(nullptr);
        row["lower"] = n;
        row["upper"] = 2 * n;
        row["within"] = ok;
        rows.push_back(row);
      } else {
        out << "n=" << n << " b2="
            << (exact ? std::to_string(*exact) : std::string("unknown"))
            << " bounds=[" << n << "," << 2 * n << "]"
            << (ok ? "" : " OUTSIDE") << "\n";
      }
    }
    if (grid_format == "json") out << rows.dump(2) << "\n";
    emit(grid_out, out.str());
    if (bad) exit_code = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const burnlab::LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
