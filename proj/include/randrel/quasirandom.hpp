#pragma once

#include <cstddef>
#include <vector>

#include "randrel/core.hpp"

namespace randrel {

/// G_a: vertices are the diversity atoms other than `center`; {b,c} is an
/// edge iff {a,b,c} is mandatory, b carries a loop iff {a,b,b} is mandatory.
/// Cycles aab and aaa contribute nothing.
struct AtomGraph {
  std::size_t n = 0;
  AtomId center = 0;
  std::vector<AtomId> vertices;
  std::vector<AtomSet> adjacency;  // indexed by atom id; loops are not stored here
  AtomSet loops;

  std::size_t edge_count() const;
  std::size_t loop_count() const { return loops.count(); }
  /// Neighbours plus one for a loop.
  std::size_t degree(AtomId v) const { return adjacency[v].count() + (loops.test(v) ? 1 : 0); }
  bool has_edge(AtomId b, AtomId c) const { return adjacency[b].test(c); }
};

/// Throws std::invalid_argument for n = 1 (no vertices) or a non-diversity center.
AtomGraph atom_graph(const CycleStructure& s, AtomId center);

struct GraphStats {
  /// (edges + loops) / (C(n-1,2) + (n-1)).
  double edge_density = 0.0;
  /// Fraction of vertices with |deg - p(n-2)| > eps(n-1).
  double degree_deviation_fraction = 0.0;
  /// Mean over vertex pairs of |codeg - p^2 (n-3)|; loops ignored.
  double codegree_deviation = 0.0;
};

GraphStats graph_stats(const AtomGraph& g, double p, double epsilon);

/// Pass rule for one G_a: density within eps of p, degree deviation fraction
/// at most eps, codegree deviation at most eps p^2 (n-3) + eps sqrt(n).
bool atom_graph_passes(const GraphStats& stats, std::size_t n, double p, double epsilon);

struct QuasirandomVerdict {
  std::vector<GraphStats> per_atom_stats;
  std::vector<bool> per_atom_pass;
  double failing_fraction = 0.0;
  bool algebra_quasirandom = false;
};

/// Requires n >= 3. The algebra passes when at most a delta fraction of its
/// atom graphs fail.
QuasirandomVerdict algebra_quasirandomness(const CycleStructure& s, double p, double epsilon, double delta);

}  // namespace randrel
