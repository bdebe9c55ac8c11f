#include "randrel/quasirandom.hpp"

#include <cmath>
#include <stdexcept>

namespace randrel {

std::size_t AtomGraph::edge_count() const {
  std::size_t twice = 0;
  for (AtomId v : vertices) twice += adjacency[v].count();
  return twice / 2;
}

AtomGraph atom_graph(const CycleStructure& s, AtomId center) {
  const std::size_t n = s.n();
  if (n < 2) throw std::invalid_argument("atom graphs need at least two diversity atoms");
  if (center >= n) throw std::invalid_argument("center must be a diversity atom");

  AtomGraph g;
  g.n = n;
  g.center = center;
  g.adjacency.assign(n, AtomSet{});
  for (AtomId v = 0; v < n; ++v)
    if (v != center) g.vertices.push_back(v);

  for (std::size_t x = 0; x < g.vertices.size(); ++x) {
    const AtomId b = g.vertices[x];
    if (s.mandatory(center, b, b)) g.loops.set(b);
    for (std::size_t y = x + 1; y < g.vertices.size(); ++y) {
      const AtomId c = g.vertices[y];
      if (s.mandatory(center, b, c)) {
        g.adjacency[b].set(c);
        g.adjacency[c].set(b);
      }
    }
  }
  return g;
}

GraphStats graph_stats(const AtomGraph& g, double p, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const auto n = static_cast<double>(g.n);
  const auto vcount = static_cast<double>(g.vertices.size());
  const double vertex_pairs = vcount * (vcount - 1.0) / 2.0;

  GraphStats stats;
  stats.edge_density = static_cast<double>(g.edge_count() + g.loop_count()) / (vertex_pairs + vcount);

  std::size_t deviating = 0;
  for (AtomId v : g.vertices) {
    if (std::abs(static_cast<double>(g.degree(v)) - p * (n - 2.0)) > epsilon * (n - 1.0)) ++deviating;
  }
  stats.degree_deviation_fraction = static_cast<double>(deviating) / vcount;

  if (vertex_pairs > 0.0) {
    const double target = p * p * (n - 3.0);
    double total = 0.0;
    for (std::size_t x = 0; x < g.vertices.size(); ++x)
      for (std::size_t y = x + 1; y < g.vertices.size(); ++y) {
        const auto common = (g.adjacency[g.vertices[x]] & g.adjacency[g.vertices[y]]).count();
        total += std::abs(static_cast<double>(common) - target);
      }
    stats.codegree_deviation = total / vertex_pairs;
  }
  return stats;
}

bool atom_graph_passes(const GraphStats& stats, std::size_t n, double p, double epsilon) {
  const auto nd = static_cast<double>(n);
  return std::abs(stats.edge_density - p) <= epsilon && stats.degree_deviation_fraction <= epsilon &&
         stats.codegree_deviation <= epsilon * p * p * (nd - 3.0) + epsilon * std::sqrt(nd);
}

QuasirandomVerdict algebra_quasirandomness(const CycleStructure& s, double p, double epsilon, double delta) {
  const std::size_t n = s.n();
  if (n < 3) throw std::invalid_argument("quasirandomness needs at least three diversity atoms");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");

  QuasirandomVerdict verdict;
  std::size_t failing = 0;
  for (AtomId a = 0; a < n; ++a) {
    const GraphStats stats = graph_stats(atom_graph(s, a), p, epsilon);
    const bool pass = atom_graph_passes(stats, n, p, epsilon);
    verdict.per_atom_stats.push_back(stats);
    verdict.per_atom_pass.push_back(pass);
    if (!pass) ++failing;
  }
  verdict.failing_fraction = static_cast<double>(failing) / static_cast<double>(n);
  verdict.algebra_quasirandom = verdict.failing_fraction <= delta;
  return verdict;
}

}  // namespace randrel
