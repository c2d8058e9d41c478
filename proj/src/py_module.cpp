#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "burnlab/burn.hpp"
#include "burnlab/closed_form.hpp"
#include "burnlab/corpus.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/family.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/percolation.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/verify.hpp"

namespace py = pybind11;
using namespace burnlab;

namespace {

std::vector<int> mask_to_list(Bits m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest_bit(m));
  return out;
}

py::dict trace_dict(const BurnTrace& tr) {
  py::dict d;
  d["outcome"] = tr.outcome == BurnOutcome::completed ? "completed" : "stalled";
  d["final_round"] = tr.final_round;
  d["consumed"] = tr.consumed;
  py::list rounds;
  for (Bits blue : tr.rounds) rounds.append(mask_to_list(blue));
  d["rounds"] = rounds;
  return d;
}

py::dict solve_dict(const SolveResult& res) {
  py::dict d;
  if (res.value)
    d["value"] = *res.value;
  else
    d["value"] = py::none();
  d["witness"] = res.witness.sources;
  d["nodes"] = res.stats.nodes;
  d["memo_hits"] = res.stats.memo_hits;
  return d;
}

py::dict answer_dict(const FamilyAnswer& ans) {
  py::dict d;
  d["b2"] = py::make_tuple(ans.b2.lo, ans.b2.hi);
  d["t2"] = py::make_tuple(ans.t2.lo, ans.t2.hi);
  if (ans.witness)
    d["witness"] = ans.witness->sources;
  else
    d["witness"] = py::none();
  d["note"] = ans.note;
  return d;
}

SolveOptions make_solve_options(int threshold, int max_rounds, int max_vertices,
                                bool require_connected) {
  SolveOptions o;
  o.threshold = threshold;
  o.max_rounds = max_rounds;
  o.max_vertices = max_vertices;
  o.require_connected = require_connected;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact threshold burning and bootstrap percolation";
  m.attr("__version__") = kVersion;

  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&,
                    std::vector<std::string>>(),
           py::arg("n"), py::arg("edges"),
           py::arg("labels") = std::vector<std::string>{})
      .def_static("from_edge_list",
                  [](const std::string& text) { return Graph::from_edge_list(text); })
      .def("to_edge_list", &Graph::to_edge_list)
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, int v) { return mask_to_list(g.neighbors(v)); })
      .def("has_edge", &Graph::has_edge)
      .def("is_connected", &Graph::is_connected)
      .def("vertex_name", &Graph::vertex_name)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("family",
        [](const std::string& spec) { return generate(FamilySpec::parse(spec)); },
        py::arg("spec"), "build a graph from a family spec string");
  m.def("family_vertex_count",
        [](const std::string& spec) {
          return spec_vertex_count(FamilySpec::parse(spec));
        },
        py::arg("spec"));
  m.def("corona_of", &corona_of, py::arg("base"));
  m.def("join_of", &join_of, py::arg("a"), py::arg("b"));
  m.def("cartesian_of", &cartesian_of, py::arg("a"), py::arg("b"));

  m.def("structural_stats",
        [](const Graph& g) {
          auto s = structural_stats(g);
          py::dict d;
          d["leaves"] = s.leaves;
          d["deg2_chain_cover"] = s.deg2_chain_cover;
          return d;
        },
        py::arg("graph"));
  m.def("min_dominating_set", &min_dominating_set, py::arg("graph"),
        py::arg("exact_limit") = 24);

  m.def("simulate",
        [](const Graph& g, const std::vector<int>& sources, int threshold) {
          return trace_dict(simulate(g, BurnSequence{sources, threshold}));
        },
        py::arg("graph"), py::arg("sources"), py::arg("threshold") = 2);
  m.def("necessity_check",
        [](const Graph& g, const std::vector<int>& sources, int threshold) {
          py::list out;
          for (const auto& v :
               necessity_check(g, BurnSequence{sources, threshold})) {
            py::dict d;
            d["kind"] = v.kind == NecessityViolation::Kind::leaf_unsourced
                            ? "leaf_unsourced"
                            : "degree2_pair_unsourced";
            d["u"] = v.u;
            d["v"] = v.v;
            out.append(d);
          }
          return out;
        },
        py::arg("graph"), py::arg("sources"), py::arg("threshold") = 2);

  m.def("burning_number",
        [](const Graph& g, int threshold, int max_rounds, int max_vertices,
           bool require_connected) {
          return solve_dict(burning_number(
              g, make_solve_options(threshold, max_rounds, max_vertices,
                                    require_connected)));
        },
        py::arg("graph"), py::arg("threshold") = 2, py::arg("max_rounds") = -1,
        py::arg("max_vertices") = 30, py::arg("require_connected") = true);
  m.def("source_number",
        [](const Graph& g, int known_b, int threshold, int max_rounds,
           int max_vertices, bool require_connected) {
          return solve_dict(source_number(
              g, known_b,
              make_solve_options(threshold, max_rounds, max_vertices,
                                 require_connected)));
        },
        py::arg("graph"), py::arg("known_b"), py::arg("threshold") = 2,
        py::arg("max_rounds") = -1, py::arg("max_vertices") = 30,
        py::arg("require_connected") = true);
  m.def("lower_bound", &lower_bound, py::arg("graph"), py::arg("threshold") = 2);

  m.def("percolate",
        [](const Graph& g, const std::vector<int>& seeds, int threshold)
            -> py::object {
          auto r = percolate(g, seeds, threshold);
          if (!r) return py::none();
          return py::int_(*r);
        },
        py::arg("graph"), py::arg("seeds"), py::arg("threshold") = 2);
  m.def("min_percolating",
        [](const Graph& g, int threshold, int max_vertices) {
          PercolationOptions o;
          o.threshold = threshold;
          o.max_vertices = max_vertices;
          auto res = min_percolating(g, o);
          py::dict d;
          d["m"] = res.m;
          d["tau"] = res.tau;
          d["witness"] = res.witness_set;
          return d;
        },
        py::arg("graph"), py::arg("threshold") = 2, py::arg("max_vertices") = 25);
  m.def("sandwich",
        [](const Graph& g) {
          auto rep = sandwich_check(g);
          py::dict d;
          d["m"] = rep.m;
          d["tau"] = rep.tau;
          d["t2"] = rep.t2;
          d["b2"] = rep.b2;
          d["holds"] = rep.holds;
          return d;
        },
        py::arg("graph"));

  m.def("closed_form",
        [](const std::string& spec) {
          return answer_dict(closed_form(FamilySpec::parse(spec)));
        },
        py::arg("spec"));
  m.def("construct_sequence",
        [](const std::string& spec) {
          return construct_sequence(FamilySpec::parse(spec)).sources;
        },
        py::arg("spec"));
  m.def("corona_sequence",
        [](const Graph& base) { return corona_sequence(base).sources; },
        py::arg("base"));
  m.def("wheel_gap_instance",
        [](int gap) { return wheel_gap_instance(gap).to_string(); },
        py::arg("gap"));

  m.def("connected_graphs", &connected_graphs, py::arg("n"));
  m.def("random_connected", &random_connected, py::arg("n"),
        py::arg("edge_prob"), py::arg("seed"));
  m.def("drop_one_edge",
        [](const Graph& g, std::uint64_t seed) -> py::object {
          auto h = drop_one_edge(g, seed);
          if (!h) return py::none();
          return py::cast(*h);
        },
        py::arg("graph"), py::arg("seed"));

  m.def("run_suite",
        [](const std::string& suite, int max_n, int jobs, std::uint64_t seed,
           int random_count) {
          VerifyOptions o;
          o.max_n = max_n;
          o.jobs = jobs;
          o.seed = seed;
          o.random_count = random_count;
          auto rep = run_suite(suite, o);
          py::dict d;
          d["suite"] = rep.suite;
          d["seed"] = rep.seed;
          d["limits"] = rep.limits;
          d["disagreements"] = rep.disagreements();
          py::list rows;
          for (const auto& r : rep.rows) {
            py::dict row;
            row["instance"] = r.instance;
            row["quantity"] = r.quantity;
            row["formula"] = r.formula;
            row["solver"] = r.solver;
            row["agree"] = r.agree;
            row["witness_ok"] = r.witness_ok;
            rows.append(row);
          }
          d["rows"] = rows;
          return d;
        },
        py::arg("suite"), py::arg("max_n") = 0, py::arg("jobs") = 1,
        py::arg("seed") = 20240901, py::arg("random_count") = 200);
}
