#include "randrel/report.hpp"

#include <sstream>

#include "randrel/experiment.hpp"

namespace randrel {

using nlohmann::json;

std::string atom_set_name(const AtomSet& set, std::size_t n) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](AtomId a) {
    if (!first) out += ",";
    out += atom_name(a, n);
    first = false;
  });
  return out + "}";
}

CheckReport check_structure(const CycleStructure& s, std::optional<double> p, double epsilon, double delta) {
  CheckReport r;
  r.n = s.n();
  r.mandatory = s.mandatory_census();
  r.associativity = is_associative(s);
  r.flexibility = flexible_atoms(s);
  r.p = p.value_or(static_cast<double>(s.bits().count()) / static_cast<double>(s.bits().size()));
  if (s.n() >= 3) r.quasirandom = algebra_quasirandomness(s, r.p, epsilon, delta);
  return r;
}

json verdict_json(const QuasirandomVerdict& verdict, std::size_t n) {
  json atoms = json::object();
  for (std::size_t a = 0; a < verdict.per_atom_stats.size(); ++a) {
    const auto& st = verdict.per_atom_stats[a];
    atoms[atom_name(static_cast<AtomId>(a), n)] = {
        {"edge_density", st.edge_density},
        {"degree_deviation_fraction", st.degree_deviation_fraction},
        {"codegree_deviation", st.codegree_deviation},
        {"pass", static_cast<bool>(verdict.per_atom_pass[a])},
    };
  }
  return {{"atoms", atoms},
          {"failing_fraction", verdict.failing_fraction},
          {"algebra_quasirandom", verdict.algebra_quasirandom}};
}

json to_json(const CheckReport& r) {
  json j;
  j["n"] = r.n;
  j["mandatory_cycles"] = {{"one_cycles", r.mandatory.one_cycles},
                           {"two_cycles", r.mandatory.two_cycles},
                           {"three_cycles", r.mandatory.three_cycles}};
  j["associative"] = r.associativity.associative;
  if (const auto& v = r.associativity.first_violation) {
    j["violation"] = {{"triple", {atom_name(v->u, r.n), atom_name(v->v, r.n), atom_name(v->w, r.n)}},
                      {"left", atom_set_name(v->left, r.n)},
                      {"right", atom_set_name(v->right, r.n)}};
  } else {
    j["violation"] = nullptr;
  }
  j["paper_condition"] = r.associativity.paper_condition_holds;
  j["extended_condition"] = r.associativity.extended_condition_holds;
  json flexible = json::array();
  r.flexibility.flexible_atoms.for_each([&](AtomId a) { flexible.push_back(atom_name(a, r.n)); });
  j["flexible_atoms"] = flexible;
  j["representable"] =
      r.flexibility.representable_flag == Representability::Representable ? "representable" : "unknown";
  j["quasirandom"] = r.quasirandom ? verdict_json(*r.quasirandom, r.n) : json(nullptr);
  if (r.quasirandom) j["quasirandom"]["p"] = r.p;
  return j;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  out << "atoms: " << r.n << " diversity + 1'\n";
  out << "mandatory cycles: " << r.mandatory.one_cycles << " 1-cycles, " << r.mandatory.two_cycles
      << " 2-cycles, " << r.mandatory.three_cycles << " 3-cycles\n";
  out << "associative: " << (r.associativity.associative ? "true" : "false") << "\n";
  if (const auto& v = r.associativity.first_violation) {
    out << "violation: (" << atom_name(v->u, r.n) << "," << atom_name(v->v, r.n) << "," << atom_name(v->w, r.n)
        << "): (u;v);w = " << atom_set_name(v->left, r.n) << " but u;(v;w) = " << atom_set_name(v->right, r.n)
        << "\n";
  }
  out << "witness condition (diversity witnesses): " << (r.associativity.paper_condition_holds ? "holds" : "fails")
      << "\n";
  out << "witness condition (identity allowed): " << (r.associativity.extended_condition_holds ? "holds" : "fails")
      << "\n";
  out << "flexible: " << atom_set_name(r.flexibility.flexible_atoms, r.n) << "\n";
  out << "representability: "
      << (r.flexibility.representable_flag == Representability::Representable ? "representable" : "unknown") << "\n";
  if (r.quasirandom) {
    out << "quasirandom (p = " << format_real(r.p) << "): " << (r.quasirandom->algebra_quasirandom ? "true" : "false")
        << ", failing fraction " << format_real(r.quasirandom->failing_fraction) << "\n";
  }
  return out.str();
}

json census_json(const Census& c) {
  return {{"n", c.n},
          {"total", c.total_structures},
          {"associative_labeled", c.associative_labeled},
          {"associative_classes", c.associative_classes},
          {"with_flexible_labeled", c.with_flexible_labeled}};
}

}  // namespace randrel
