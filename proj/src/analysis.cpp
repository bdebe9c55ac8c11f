#include "randrel/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace randrel {
namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

double pairs_containing(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n + 1) / 2.0; }

}  // namespace

std::optional<AssociativityViolation> find_associativity_violation(const CompositionTable& t) {
  const auto atoms = static_cast<AtomId>(t.atoms());
  for (AtomId u = 0; u < atoms; ++u) {
    for (AtomId v = 0; v < atoms; ++v) {
      const AtomSet& uv = t.entry(u, v);
      for (AtomId w = 0; w < atoms; ++w) {
        AtomSet left;
        uv.for_each([&](AtomId x) { left |= t.entry(x, w); });
        AtomSet right;
        t.entry(v, w).for_each([&](AtomId y) { right |= t.entry(u, y); });
        if (left != right) return AssociativityViolation{u, v, w, left, right};
      }
    }
  }
  return std::nullopt;
}

AssociativityReport is_associative(const CycleStructure& s) {
  const CompositionTable t = build_composition_table(s);
  AssociativityReport report;
  report.first_violation = find_associativity_violation(t);
  report.associative = !report.first_violation.has_value();
  report.paper_condition_holds = witness_condition(t, false);
  report.extended_condition_holds = witness_condition(t, true);
  return report;
}

bool witness_condition(const CompositionTable& t, bool include_identity) {
  const auto n = static_cast<AtomId>(t.n());
  const AtomSet witnesses = AtomSet::prefix(include_identity ? n + 1 : n);
  // The condition is symmetric under (a,b) <-> (x,y), so only ordered pairs
  // with (a,b) <= (x,y) are visited.
  for (AtomId a = 0; a < n; ++a) {
    for (AtomId b = 0; b < n; ++b) {
      const AtomSet& ab = t.entry(a, b);
      for (AtomId x = a; x < n; ++x) {
        for (AtomId y = (x == a ? b : 0); y < n; ++y) {
          if (!ab.intersects(t.entry(x, y))) continue;
          if (!(t.entry(a, x) & t.entry(b, y)).intersects(witnesses)) return false;
        }
      }
    }
  }
  return true;
}

bool witness_condition(const CycleStructure& s, bool include_identity) {
  return witness_condition(build_composition_table(s), include_identity);
}

AtomSet flexible_atom_set(const CycleStructure& s) {
  const auto n = static_cast<AtomId>(s.n());
  AtomSet flexible;
  for (AtomId z = 0; z < n; ++z) {
    bool all = true;
    for (AtomId a = 0; a < n && all; ++a)
      for (AtomId b = a; b < n && all; ++b) all = s.mandatory(a, b, z);
    if (all) flexible.set(z);
  }
  return flexible;
}

FlexibilityReport flexible_atoms(const CycleStructure& s) {
  FlexibilityReport report;
  report.flexible_atoms = flexible_atom_set(s);
  report.count = report.flexible_atoms.count();
  report.has_flexible = report.count > 0;
  if (report.has_flexible && !find_associativity_violation(build_composition_table(s)))
    report.representable_flag = Representability::Representable;
  return report;
}

double expected_flexible_count(std::size_t n, double p) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  require_probability(p);
  return static_cast<double>(n) * std::pow(p, pairs_containing(n));
}

double critical_p(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return std::exp(-std::log(static_cast<double>(n)) / pairs_containing(n));
}

FailureBound failure_bound(std::size_t n, double p) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  const double log_miss = std::log1p(-p * p) * static_cast<double>(n);
  const auto m = static_cast<double>(cycle_count(n));

  FailureBound bound;
  if (m >= 2.0) bound.union_bound = std::exp(std::log(m) + std::log(m - 1.0) - std::log(2.0) + log_miss);
  bound.asymptotic_bound = std::exp(6.0 * std::log(static_cast<double>(n)) - std::log(72.0) + log_miss);
  return bound;
}

}  // namespace randrel
