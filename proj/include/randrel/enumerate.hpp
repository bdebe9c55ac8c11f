#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "randrel/analysis.hpp"
#include "randrel/core.hpp"

namespace randrel {

/// Exhaustive enumeration refuses structures with more cycles than this.
inline constexpr std::size_t kMaxEnumerationCycles = 25;
/// canonicalize() walks all n! relabelings and refuses larger n.
inline constexpr std::size_t kMaxCanonicalizeAtoms = 10;

/// Every structure over n atoms, in ascending numeric order of the bit vector.
class StructureStream {
 public:
  explicit StructureStream(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::uint64_t total() const noexcept { return total_; }
  std::optional<CycleStructure> next();

 private:
  std::size_t n_;
  std::size_t cycles_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
};

/// Throws LimitError when M(n) exceeds kMaxEnumerationCycles.
StructureStream all_structures(std::size_t n);

/// Image of s under a relabeling of diversity atoms (perm[a] is the new id of a).
CycleStructure permute(const CycleStructure& s, std::span<const AtomId> perm);

struct CanonicalForm {
  std::size_t n = 0;
  BitVector canonical_bits;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Numerically least bit vector over all n! relabelings. Throws LimitError
/// for n > kMaxCanonicalizeAtoms.
CanonicalForm canonicalize(const CycleStructure& s);

/// Precomputed relabelings for structures whose bit vector fits one word
/// (n <= 6). Used by the census hot loop.
class Canonicalizer {
 public:
  explicit Canonicalizer(std::size_t n);
  std::uint64_t canonical_word(std::uint64_t bits) const;
  /// Number of distinct images of `bits` (orbit size under relabeling).
  std::size_t orbit_size(std::uint64_t bits) const;

 private:
  std::size_t cycles_;
  std::vector<std::vector<std::uint8_t>> maps_;
};

struct Census {
  std::size_t n = 0;
  std::uint64_t total_structures = 0;
  std::uint64_t associative_labeled = 0;
  std::uint64_t associative_classes = 0;
  std::uint64_t with_flexible_labeled = 0;
  std::optional<CycleStructure> nonassociative_example;
  /// One canonical representative per associative class, ascending.
  std::vector<CycleStructure> catalog;
};

/// Streams all structures; memory stays proportional to the class count.
/// Index blocks are split across `workers` threads and merged in order.
Census census(std::size_t n, unsigned workers = 1);

struct NonAssociativeExample {
  CycleStructure structure;
  AssociativityViolation violation;
};

/// First `limit` non-associative structures in numeric order.
std::vector<NonAssociativeExample> find_nonassociative_examples(std::size_t n, std::size_t limit);

}  // namespace randrel
