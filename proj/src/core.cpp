#include "randrel/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace randrel {
namespace {

// M(m) extended with M(0) = 0.
constexpr std::uint64_t triples(std::uint64_t m) { return m * (m + 1) * (m + 2) / 6; }
constexpr std::uint64_t pairs(std::uint64_t m) { return m * (m + 1) / 2; }

void require_atoms(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
}

}  // namespace

Cycle Cycle::of(AtomId a, AtomId b, AtomId c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return Cycle{a, b, c};
}

std::uint64_t cycle_count(std::size_t n) {
  require_atoms(n);
  return triples(n);
}

CycleTypeCensus cycle_type_census(std::size_t n) {
  require_atoms(n);
  const std::uint64_t m = n;
  return {m, m * (m - 1), m * (m - 1) * (m - 2) / 6};
}

std::size_t cycle_index(const Cycle& c, std::size_t n) {
  require_atoms(n);
  if (!(c.i <= c.j && c.j <= c.k)) throw std::invalid_argument("cycle is not in sorted form");
  if (c.k >= n) throw std::out_of_range("cycle atom out of range");
  const std::uint64_t m = n;
  return static_cast<std::size_t>((triples(m) - triples(m - c.i)) + (pairs(m - c.i) - pairs(m - c.j)) +
                                  (c.k - c.j));
}

Cycle cycle_at(std::size_t index, std::size_t n) {
  if (index >= cycle_count(n)) throw std::out_of_range("cycle index out of range");
  std::uint64_t rem = index;
  AtomId i = 0;
  while (rem >= pairs(n - i)) {
    rem -= pairs(n - i);
    ++i;
  }
  AtomId j = i;
  while (rem >= n - j) {
    rem -= n - j;
    ++j;
  }
  return Cycle{i, j, static_cast<AtomId>(j + rem)};
}

CycleIndexer::CycleIndexer(std::size_t n) : n_(n) {
  cycles_.reserve(static_cast<std::size_t>(cycle_count(n)));
  for (AtomId i = 0; i < n; ++i)
    for (AtomId j = i; j < n; ++j)
      for (AtomId k = j; k < n; ++k) cycles_.push_back(Cycle{i, j, k});
}

CycleStructure::CycleStructure(std::size_t n, BitVector mandatory) : n_(n), mandatory_(std::move(mandatory)) {
  require_atoms(n);
  if (n > kMaxDiversityAtoms)
    throw std::invalid_argument("n exceeds the configured cap of " + std::to_string(kMaxDiversityAtoms) +
                                " diversity atoms");
  if (mandatory_.size() != cycle_count(n))
    throw std::invalid_argument("bit vector length does not match the cycle count");
}

CycleStructure CycleStructure::empty(std::size_t n) {
  return CycleStructure(n, BitVector(static_cast<std::size_t>(cycle_count(n))));
}

CycleStructure CycleStructure::full(std::size_t n) {
  BitVector bits(static_cast<std::size_t>(cycle_count(n)));
  for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i);
  return CycleStructure(n, std::move(bits));
}

CycleStructure CycleStructure::from_cycles(std::size_t n, std::span<const Cycle> cycles) {
  BitVector bits(static_cast<std::size_t>(cycle_count(n)));
  for (const Cycle& c : cycles) {
    const Cycle sorted = Cycle::of(c.i, c.j, c.k);
    const std::size_t idx = cycle_index(sorted, n);
    if (bits.test(idx)) throw std::invalid_argument("duplicate cycle");
    bits.set(idx);
  }
  return CycleStructure(n, std::move(bits));
}

std::vector<Cycle> CycleStructure::mandatory_cycles() const {
  std::vector<Cycle> out;
  std::size_t idx = 0;
  for (AtomId i = 0; i < n_; ++i)
    for (AtomId j = i; j < n_; ++j)
      for (AtomId k = j; k < n_; ++k, ++idx)
        if (mandatory_.test(idx)) out.push_back(Cycle{i, j, k});
  return out;
}

CycleTypeCensus CycleStructure::mandatory_census() const {
  CycleTypeCensus census;
  for (const Cycle& c : mandatory_cycles()) {
    switch (c.distinct_atoms()) {
      case 1: ++census.one_cycles; break;
      case 2: ++census.two_cycles; break;
      default: ++census.three_cycles; break;
    }
  }
  return census;
}

CompositionTable::CompositionTable(std::size_t n, std::vector<AtomSet> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != (n + 1) * (n + 1)) throw std::invalid_argument("composition table has wrong size");
}

CompositionTable build_composition_table(const CycleStructure& s) {
  const std::size_t n = s.n();
  const std::size_t width = n + 1;
  const AtomId id = identity_atom(n);
  std::vector<AtomSet> entries(width * width);
  auto at = [&](AtomId u, AtomId v) -> AtomSet& { return entries[u * width + v]; };

  for (AtomId x = 0; x <= id; ++x) {
    at(id, x).set(x);
    at(x, id).set(x);
  }
  for (AtomId a = 0; a < n; ++a) at(a, a).set(id);

  // Each mandatory cycle places every atom in the composition of the other two,
  // in all six orientations.
  for (const Cycle& c : s.mandatory_cycles()) {
    at(c.i, c.j).set(c.k);
    at(c.j, c.i).set(c.k);
    at(c.i, c.k).set(c.j);
    at(c.k, c.i).set(c.j);
    at(c.j, c.k).set(c.i);
    at(c.k, c.j).set(c.i);
  }
  return CompositionTable(n, std::move(entries));
}

AtomSet compose_sets(const CompositionTable& t, const AtomSet& xs, const AtomSet& ys) {
  AtomSet out;
  xs.for_each([&](AtomId x) { ys.for_each([&](AtomId y) { out |= t.entry(x, y); }); });
  return out;
}

std::string atom_name(AtomId a, std::size_t n) {
  if (a == identity_atom(n)) return "1'";
  if (n <= 26) return std::string(1, static_cast<char>('a' + a));
  return std::to_string(a);
}

}  // namespace randrel
