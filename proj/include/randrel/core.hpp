#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "randrel/atom_set.hpp"
#include "randrel/bit_vector.hpp"

namespace randrel {

/// A diversity cycle: a multiset of three diversity atoms, stored sorted.
/// All six orientations of a cycle are the same value.
struct Cycle {
  AtomId i = 0, j = 0, k = 0;

  /// Sorts the three atoms into canonical order.
  static Cycle of(AtomId a, AtomId b, AtomId c);

  /// Number of distinct atoms: 1 (aaa), 2 (abb) or 3 (abc).
  int distinct_atoms() const { return 1 + (i != j) + (j != k); }
  bool contains(AtomId a) const { return i == a || j == a || k == a; }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// M(n) = n + 2*C(n,2) + C(n,3) = n(n+1)(n+2)/6. Throws on n = 0.
std::uint64_t cycle_count(std::size_t n);

struct CycleTypeCensus {
  std::uint64_t one_cycles = 0;
  std::uint64_t two_cycles = 0;
  std::uint64_t three_cycles = 0;
  friend bool operator==(const CycleTypeCensus&, const CycleTypeCensus&) = default;
};

/// (n, 2*C(n,2), C(n,3)).
CycleTypeCensus cycle_type_census(std::size_t n);

/// Position of `c` in the lexicographic order of sorted triples over n atoms.
std::size_t cycle_index(const Cycle& c, std::size_t n);
/// Inverse of cycle_index.
Cycle cycle_at(std::size_t index, std::size_t n);

/// Canonical index order for a fixed n, with the triples materialized once.
class CycleIndexer {
 public:
  explicit CycleIndexer(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t total() const noexcept { return cycles_.size(); }
  const Cycle& at(std::size_t index) const { return cycles_.at(index); }
  std::size_t index(const Cycle& c) const { return cycle_index(c, n_); }
  std::span<const Cycle> cycles() const noexcept { return cycles_; }

 private:
  std::size_t n_;
  std::vector<Cycle> cycles_;
};

/// One event of R(n,p): n diversity atoms and the set of mandatory cycles.
class CycleStructure {
 public:
  /// `mandatory.size()` must equal cycle_count(n).
  CycleStructure(std::size_t n, BitVector mandatory);

  static CycleStructure empty(std::size_t n);
  static CycleStructure full(std::size_t n);
  /// Throws std::invalid_argument on out-of-range atoms or duplicates.
  static CycleStructure from_cycles(std::size_t n, std::span<const Cycle> cycles);

  std::size_t n() const noexcept { return n_; }
  const BitVector& bits() const noexcept { return mandatory_; }

  bool mandatory(const Cycle& c) const { return mandatory_.test(cycle_index(c, n_)); }
  bool mandatory(AtomId a, AtomId b, AtomId c) const { return mandatory(Cycle::of(a, b, c)); }

  /// Mandatory cycles in ascending index order.
  std::vector<Cycle> mandatory_cycles() const;
  CycleTypeCensus mandatory_census() const;

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;

 private:
  std::size_t n_;
  BitVector mandatory_;
};

/// Atom-level composition over n+1 atoms (identity at position n).
class CompositionTable {
 public:
  CompositionTable(std::size_t n, std::vector<AtomSet> entries);

  std::size_t n() const noexcept { return n_; }
  std::size_t atoms() const noexcept { return n_ + 1; }
  const AtomSet& entry(AtomId u, AtomId v) const { return entries_[u * (n_ + 1) + v]; }

 private:
  std::size_t n_;
  std::vector<AtomSet> entries_;
};

CompositionTable build_composition_table(const CycleStructure& s);

/// Union of entry(x, y) over x in xs, y in ys.
AtomSet compose_sets(const CompositionTable& t, const AtomSet& xs, const AtomSet& ys);

/// "a", "b", ... for small n, "1'" for the identity, decimal ids beyond 26 atoms.
std::string atom_name(AtomId a, std::size_t n);

}  // namespace randrel
