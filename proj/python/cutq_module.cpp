#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutq/config.hpp"
#include "cutq/expander.hpp"
#include "cutq/harness.hpp"
#include "cutq/isolating.hpp"
#include "cutq/maxflow.hpp"
#include "cutq/mincut.hpp"
#include "cutq/oracle.hpp"
#include "cutq/view.hpp"

namespace py = pybind11;
using namespace cutq;

namespace {

py::dict ledger_dict(const QueryLedger& l) {
  py::dict d;
  d["cut_queries"] = l.cut_count();
  d["bis_queries"] = l.bis_count();
  d["memo_hits"] = l.memo_hit_count();
  return d;
}

py::list transcript_list(const std::vector<TranscriptRecord>& records) {
  py::list out;
  for (const auto& r : records) {
    py::dict d;
    d["seq"] = r.seq;
    d["set"] = r.set;
    d["answer"] = r.answer;
    d["tag"] = r.tag;
    out.append(d);
  }
  return out;
}

std::vector<TranscriptRecord> transcript_from(const py::list& items) {
  std::vector<TranscriptRecord> out;
  for (const auto& item : items) {
    const auto d = item.cast<py::dict>();
    out.push_back({d["seq"].cast<std::uint64_t>(), canonical(d["set"].cast<VertexSet>()), d["answer"].cast<Capacity>(),
                   d.contains("tag") ? d["tag"].cast<std::string>() : std::string()});
  }
  return out;
}

Config config_or_default(const std::optional<Config>& c) { return c ? *c : desk_profile(); }

}  // namespace

PYBIND11_MODULE(cutq, m) {
  m.doc() = "Cut-query algorithms run against a hidden graph with exact query accounting.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  py::class_<GraphInstance>(m, "Graph")
      .def(py::init<Vertex>(), py::arg("n"))
      .def(py::init([](Vertex n, const std::vector<std::tuple<Vertex, Vertex, Capacity>>& edges) {
             GraphInstance g(n);
             for (auto [u, v, w] : edges) g.add_edge(u, v, w);
             return g;
           }),
           py::arg("n"), py::arg("edges"))
      .def("add_edge", &GraphInstance::add_edge, py::arg("u"), py::arg("v"), py::arg("w") = 1)
      .def_property_readonly("n", &GraphInstance::n)
      .def_property_readonly("m", &GraphInstance::m)
      .def("capacity", &GraphInstance::capacity)
      .def("degree", &GraphInstance::degree)
      .def("cut", [](const GraphInstance& g, const VertexSet& s) { return g.cut(canonical(s)); })
      .def("edges",
           [](const GraphInstance& g) {
             std::vector<std::tuple<Vertex, Vertex, Capacity>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
             return out;
           })
      .def_static("load", &GraphInstance::load)
      .def("save", &GraphInstance::save)
      .def("__eq__", [](const GraphInstance& a, const GraphInstance& b) { return a == b; })
      .def("__repr__", [](const GraphInstance& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  py::class_<Config>(m, "Config")
      .def(py::init(&desk_profile))
      .def_static("desk", &desk_profile)
      .def_static("paper", &paper_profile)
      .def_static("parse", &parse_config)
      .def_static("load", &load_config)
      .def("set", [](Config& c, const std::string& k, const std::string& v) { c.set(k, v); })
      .def("to_dict", &Config::to_map)
      .def_readwrite("profile", &Config::profile)
      .def_readwrite("phi", &Config::phi)
      .def_readwrite("zeta", &Config::zeta)
      .def_readwrite("theta_core", &Config::theta_core)
      .def_readwrite("r_max", &Config::r_max)
      .def_readwrite("splitter_k", &Config::splitter_k);

  m.def(
      "generate",
      [](const std::string& family, Vertex n, std::uint64_t seed, double p, Vertex clique, int degree,
         Capacity planted, Capacity max_w) {
        InstanceSpec s{family_named(family), n, seed, p, clique, degree, planted, max_w};
        return generate(s);
      },
      py::arg("family"), py::arg("n"), py::arg("seed") = 0, py::arg("p") = 0.0, py::arg("clique") = 0,
      py::arg("degree") = 0, py::arg("planted") = 0, py::arg("max_w") = 1,
      "Deterministic instance of one of the harness families.");

  m.def(
      "mincut",
      [](const GraphInstance& g, std::optional<Config> cfg, bool transcript) {
        Oracle o(g, {.memoize = true, .record_transcript = transcript});
        OracleView v = OracleView::base(o);
        const MinCutAnswer a = global_mincut(v, config_or_default(cfg));
        py::dict d = ledger_dict(o.ledger());
        d["value"] = a.value;
        d["side"] = a.side;
        d["certificate"] = to_string(a.certificate);
        d["min_degree"] = a.delta;
        d["dominating_size"] = a.dominating_size;
        if (transcript) d["transcript"] = transcript_list(o.ledger().transcript());
        return d;
      },
      py::arg("graph"), py::arg("config") = py::none(), py::arg("transcript") = false,
      "Global minimum cut of an unweighted graph through cut queries.");

  m.def(
      "maxflow",
      [](const GraphInstance& g, Vertex s, Vertex t) {
        Oracle o(g);
        OracleView v = OracleView::base(o);
        const FlowResult r = dinitz_maxflow(v, s, t);
        py::dict d = ledger_dict(o.ledger());
        d["value"] = r.value;
        d["source_side"] = r.mincut_source_side;
        d["rounds"] = r.rounds;
        std::vector<int> dists;
        for (const auto& rec : r.round_log) dists.push_back(rec.d);
        d["distances"] = dists;
        return d;
      },
      py::arg("graph"), py::arg("s"), py::arg("t"));

  m.def(
      "isolating_cuts",
      [](const GraphInstance& g, const VertexSet& R, Capacity tau) {
        Oracle o(g);
        OracleView v = OracleView::base(o);
        const IsolatingResult r = isolating_cuts(v, canonical(R), tau);
        py::dict d = ledger_dict(o.ledger());
        d["found"] = r.found;
        d["best"] = r.best ? py::cast(*r.best) : py::none();
        py::dict values;
        for (const auto& rec : r.records)
          values[py::cast(rec.r)] = rec.lambda == kInfinity ? py::none() : py::cast(rec.lambda);
        d["values"] = values;
        if (r.best) d["side"] = *r.record(*r.best).side;
        return d;
      },
      py::arg("graph"), py::arg("terminals"), py::arg("tau"));

  m.def(
      "dominating_set",
      [](const GraphInstance& g) {
        Oracle o(g);
        OracleView v = OracleView::base(o);
        py::dict d;
        d["set"] = dominating_set(v);
        d.attr("update")(ledger_dict(o.ledger()));
        return d;
      },
      py::arg("graph"));

  m.def(
      "decompose",
      [](const GraphInstance& g, const VertexSet& R, Capacity tau, std::optional<double> phi, std::optional<Config> cfg) {
        Config c = config_or_default(cfg);
        if (phi) c.phi = *phi;
        Oracle o(g);
        OracleView v = OracleView::base(o);
        const Decomposition dec = decompose(v, canonical(R), tau, c);
        py::list parts;
        for (const auto& p : dec.parts) {
          py::dict pd;
          pd["V"] = p.V;
          pd["R"] = p.R;
          pd["core"] = p.core;
          pd["class"] = to_string(p.cls);
          pd["certified"] = p.certified;
          parts.append(pd);
        }
        py::dict d = ledger_dict(o.ledger());
        d["parts"] = parts;
        d["crossing"] = dec.crossing.size();
        return d;
      },
      py::arg("graph"), py::arg("terminals"), py::arg("tau"), py::arg("phi") = py::none(),
      py::arg("config") = py::none());

  m.def("reference_mincut", [](const GraphInstance& g) {
    const ReferenceCut r = reference_mincut(g);
    return py::make_tuple(r.value, r.side);
  });
  m.def("reference_maxflow", &reference_maxflow, py::arg("graph"), py::arg("s"), py::arg("t"));
  m.def("separation_check", &separation_check, py::arg("graph"), py::arg("terminals"), py::arg("c"));

  m.def(
      "replay",
      [](const GraphInstance& g, const py::list& records) { return replay_transcript(g, transcript_from(records)).mismatches; },
      py::arg("graph"), py::arg("transcript"), "Number of records whose answer differs on this graph.");

  m.def(
      "bench",
      [](const std::vector<std::string>& families, const std::vector<Vertex>& sizes,
         const std::vector<std::uint64_t>& seeds, const std::vector<std::string>& algos, std::optional<Config> cfg) {
        std::vector<InstanceSpec> specs;
        for (const auto& f : families)
          for (Vertex n : sizes)
            for (auto seed : seeds) {
              InstanceSpec s;
              s.family = family_named(f);
              s.n = n;
              s.seed = seed;
              specs.push_back(s);
            }
        std::vector<Algorithm> run;
        for (const auto& a : algos) run.push_back(algorithm_named(a));
        const SuiteResult res = run_suite(specs, run, config_or_default(cfg));
        py::list rows;
        for (const auto& r : res.rows) {
          py::dict d;
          d["family"] = r.family;
          d["n"] = r.n;
          d["m"] = r.m;
          d["seed"] = r.seed;
          d["algorithm"] = r.algorithm;
          d["answer"] = r.answer;
          d["reference_answer"] = r.reference_answer ? py::cast(*r.reference_answer) : py::none();
          d["cut_queries"] = r.cut_queries;
          d["bis_queries"] = r.bis_queries;
          d["rounds"] = r.rounds;
          d["wall_ms"] = r.wall_ms;
          d["profile"] = r.profile;
          rows.append(d);
        }
        py::dict slopes;
        for (const auto& f : res.scaling) slopes[py::make_tuple(f.family, f.algorithm)] = f.slope;
        return py::make_tuple(rows, slopes);
      },
      py::arg("families"), py::arg("sizes"), py::arg("seeds") = std::vector<std::uint64_t>{0},
      py::arg("algos") = std::vector<std::string>{"mincut"}, py::arg("config") = py::none(),
      "Rows as dicts plus per-(family, algorithm) log-log slopes of cut queries.");
}
