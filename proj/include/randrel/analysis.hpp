#pragma once

#include <cstddef>
#include <optional>

#include "randrel/core.hpp"

namespace randrel {

/// A triple of atoms where (u;v);w and u;(v;w) differ.
struct AssociativityViolation {
  AtomId u = 0, v = 0, w = 0;
  AtomSet left;   // (u;v);w
  AtomSet right;  // u;(v;w)
};

struct AssociativityReport {
  bool associative = false;
  std::optional<AssociativityViolation> first_violation;
  bool paper_condition_holds = false;
  bool extended_condition_holds = false;
};

/// Lexicographically least (u,v,w) over all n+1 atoms (identity last) with
/// (u;v);w != u;(v;w), or nullopt when the table is associative. By complete
/// additivity this decides associativity of the whole complex algebra.
std::optional<AssociativityViolation> find_associativity_violation(const CompositionTable& t);

AssociativityReport is_associative(const CycleStructure& s);

/// Cycle witness condition: for diversity a,b,x,y whose compositions a;b and
/// x;y share an atom c (the identity included, since every a a 1' cycle is
/// mandatory), some z has z in a;x and z in b;y. With include_identity = false
/// z must be a diversity atom; with true it may also be 1' (a = x and b = y).
bool witness_condition(const CycleStructure& s, bool include_identity);
bool witness_condition(const CompositionTable& t, bool include_identity);

enum class Representability { Representable, Unknown };

struct FlexibilityReport {
  AtomSet flexible_atoms;
  std::size_t count = 0;
  bool has_flexible = false;
  Representability representable_flag = Representability::Unknown;
};

/// Atoms z for which every cycle containing z is mandatory. The flag is
/// Representable only when such an atom exists and s is associative.
FlexibilityReport flexible_atoms(const CycleStructure& s);
/// Flexible atom set alone, without the associativity check.
AtomSet flexible_atom_set(const CycleStructure& s);

/// n * p^C(n+1,2).
double expected_flexible_count(std::size_t n, double p);

/// n^(-1/C(n+1,2)): the p at which the expected flexible count is one.
double critical_p(std::size_t n);

struct FailureBound {
  double union_bound = 0.0;       // C(M(n),2) * (1-p^2)^n
  double asymptotic_bound = 0.0;  // (n^6/72) * (1-p^2)^n
};

/// Evaluated in log space; p must lie in (0, 1].
FailureBound failure_bound(std::size_t n, double p);

}  // namespace randrel
