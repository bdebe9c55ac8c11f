#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

#include "randrel/analysis.hpp"
#include "randrel/core.hpp"
#include "randrel/enumerate.hpp"
#include "randrel/errors.hpp"
#include "randrel/experiment.hpp"
#include "randrel/quasirandom.hpp"
#include "randrel/report.hpp"
#include "randrel/sampler.hpp"
#include "randrel/structure_io.hpp"

namespace py = pybind11;
using namespace randrel;

namespace {

using Triple = std::tuple<AtomId, AtomId, AtomId>;

Triple to_tuple(const Cycle& c) { return {c.i, c.j, c.k}; }

std::vector<Triple> cycles_of(const CycleStructure& s) {
  std::vector<Triple> out;
  for (const Cycle& c : s.mandatory_cycles()) out.push_back(to_tuple(c));
  return out;
}

py::dict report_dict(const AssociativityReport& r) {
  py::dict d;
  d["associative"] = r.associative;
  if (r.first_violation) {
    d["violation"] = py::make_tuple(r.first_violation->u, r.first_violation->v, r.first_violation->w);
    d["left"] = r.first_violation->left.to_vector();
    d["right"] = r.first_violation->right.to_vector();
  } else {
    d["violation"] = py::none();
  }
  d["paper_condition"] = r.paper_condition_holds;
  d["extended_condition"] = r.extended_condition_holds;
  return d;
}

}  // namespace

PYBIND11_MODULE(randrel, m) {
  m.doc() = "Random symmetric integral relation algebras R(n,p)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_ValueError);

  m.attr("identity_note") = "diversity atoms are 0..n-1; the identity atom 1' is n";

  py::class_<CycleStructure>(m, "CycleStructure")
      .def_static("empty", &CycleStructure::empty, py::arg("n"))
      .def_static("full", &CycleStructure::full, py::arg("n"))
      .def_static(
          "from_cycles",
          [](std::size_t n, const std::vector<Triple>& triples) {
            std::vector<Cycle> cycles;
            for (const auto& [a, b, c] : triples) cycles.push_back(Cycle::of(a, b, c));
            return CycleStructure::from_cycles(n, cycles);
          },
          py::arg("n"), py::arg("cycles"))
      .def_static("parse", &parse_structure, py::arg("text"))
      .def_property_readonly("n", &CycleStructure::n)
      .def_property_readonly("bits_hex", [](const CycleStructure& s) { return s.bits().to_hex(); })
      .def("cycles", &cycles_of)
      .def("is_mandatory", [](const CycleStructure& s, AtomId a, AtomId b,
                              AtomId c) { return s.mandatory(a, b, c); })
      .def(
          "serialize",
          [](const CycleStructure& s, const std::string& format) {
            return serialize_structure(s, format == "bits" ? StructureFormat::Bits : StructureFormat::Cycles);
          },
          py::arg("format") = "cycles")
      .def("__eq__", [](const CycleStructure& a, const CycleStructure& b) { return a == b; })
      .def("__repr__", [](const CycleStructure& s) {
        return "CycleStructure(n=" + std::to_string(s.n()) + ", bits=0x" + s.bits().to_hex() + ")";
      });

  m.def("cycle_count", &cycle_count, py::arg("n"));
  m.def(
      "cycle_index", [](const Triple& c, std::size_t n) { return cycle_index(Cycle{std::get<0>(c), std::get<1>(c), std::get<2>(c)}, n); },
      py::arg("cycle"), py::arg("n"));
  m.def(
      "cycle_at", [](std::size_t index, std::size_t n) { return to_tuple(cycle_at(index, n)); }, py::arg("index"),
      py::arg("n"));
  m.def(
      "cycle_type_census",
      [](std::size_t n) {
        const auto c = cycle_type_census(n);
        return std::make_tuple(c.one_cycles, c.two_cycles, c.three_cycles);
      },
      py::arg("n"));

  m.def(
      "sample", [](std::size_t n, double p, std::uint64_t seed) { return sample({n, p, seed}); }, py::arg("n"),
      py::arg("p"), py::arg("seed"));
  m.def("trial_seed", &trial_seed, py::arg("master_seed"), py::arg("trial_index"));

  m.def(
      "is_associative", [](const CycleStructure& s) { return report_dict(is_associative(s)); }, py::arg("structure"));
  m.def(
      "witness_condition", [](const CycleStructure& s, bool ident) { return witness_condition(s, ident); },
      py::arg("structure"), py::arg("include_identity"));
  m.def(
      "flexible_atoms",
      [](const CycleStructure& s) {
        const auto r = flexible_atoms(s);
        py::dict d;
        d["atoms"] = r.flexible_atoms.to_vector();
        d["count"] = r.count;
        d["representable"] = r.representable_flag == Representability::Representable ? "representable" : "unknown";
        return d;
      },
      py::arg("structure"));
  m.def("expected_flexible_count", &expected_flexible_count, py::arg("n"), py::arg("p"));
  m.def("critical_p", &critical_p, py::arg("n"));
  m.def(
      "failure_bound",
      [](std::size_t n, double p) {
        const auto b = failure_bound(n, p);
        return std::make_tuple(b.union_bound, b.asymptotic_bound);
      },
      py::arg("n"), py::arg("p"));

  m.def(
      "canonicalize", [](const CycleStructure& s) { return CycleStructure(s.n(), canonicalize(s).canonical_bits); },
      py::arg("structure"));
  m.def(
      "census",
      [](std::size_t n) {
        const Census c = census(n);
        py::dict d;
        d["n"] = c.n;
        d["total"] = c.total_structures;
        d["associative_labeled"] = c.associative_labeled;
        d["associative_classes"] = c.associative_classes;
        d["with_flexible_labeled"] = c.with_flexible_labeled;
        d["catalog"] = c.catalog;
        return d;
      },
      py::arg("n"));

  m.def(
      "atom_graph",
      [](const CycleStructure& s, AtomId center) {
        const AtomGraph g = atom_graph(s, center);
        std::vector<std::pair<AtomId, AtomId>> edges;
        for (AtomId b : g.vertices)
          g.adjacency[b].for_each([&](AtomId c) {
            if (b < c) edges.emplace_back(b, c);
          });
        py::dict d;
        d["vertices"] = g.vertices;
        d["edges"] = edges;
        d["loops"] = g.loops.to_vector();
        return d;
      },
      py::arg("structure"), py::arg("center"));
  m.def(
      "algebra_quasirandomness",
      [](const CycleStructure& s, double p, double epsilon, double delta) {
        const auto v = algebra_quasirandomness(s, p, epsilon, delta);
        py::dict d;
        d["per_atom_pass"] = v.per_atom_pass;
        d["failing_fraction"] = v.failing_fraction;
        d["algebra_quasirandom"] = v.algebra_quasirandom;
        return d;
      },
      py::arg("structure"), py::arg("p"), py::arg("epsilon") = 0.1, py::arg("delta") = 0.1);

  m.def(
      "run_experiment",
      [](const std::string& config_json, unsigned workers) {
        const auto out = run_experiment(ExperimentConfig::from_json_text(config_json), workers);
        return std::make_tuple(out.csv, out.per_trial_csv);
      },
      py::arg("config_json"), py::arg("workers") = 1);
}
