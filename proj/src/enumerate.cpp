#include "randrel/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "randrel/errors.hpp"

namespace randrel {
namespace {

std::size_t enumeration_cycles(std::size_t n) {
  const auto m = static_cast<std::size_t>(cycle_count(n));
  if (m > kMaxEnumerationCycles)
    throw LimitError("exhaustive enumeration is capped at " + std::to_string(kMaxEnumerationCycles) +
                     " cycles; n = " + std::to_string(n) + " has " + std::to_string(m));
  return m;
}

struct PartialCensus {
  std::uint64_t associative = 0;
  std::uint64_t flexible = 0;
  std::optional<std::uint64_t> first_nonassociative;
  std::set<std::uint64_t> classes;
};

PartialCensus census_block(std::size_t n, const Canonicalizer& canon, std::uint64_t begin, std::uint64_t end) {
  const std::size_t m = static_cast<std::size_t>(cycle_count(n));
  PartialCensus part;
  for (std::uint64_t value = begin; value < end; ++value) {
    const CycleStructure s(n, BitVector::from_word(m, value));
    if (!flexible_atom_set(s).empty()) ++part.flexible;
    if (find_associativity_violation(build_composition_table(s))) {
      if (!part.first_nonassociative) part.first_nonassociative = value;
      continue;
    }
    ++part.associative;
    part.classes.insert(canon.canonical_word(value));
  }
  return part;
}

}  // namespace

StructureStream::StructureStream(std::size_t n)
    : n_(n), cycles_(enumeration_cycles(n)), total_(std::uint64_t{1} << cycles_) {}

std::optional<CycleStructure> StructureStream::next() {
  if (cursor_ >= total_) return std::nullopt;
  return CycleStructure(n_, BitVector::from_word(cycles_, cursor_++));
}

StructureStream all_structures(std::size_t n) { return StructureStream(n); }

CycleStructure permute(const CycleStructure& s, std::span<const AtomId> perm) {
  if (perm.size() != s.n()) throw std::invalid_argument("permutation size does not match n");
  std::vector<Cycle> image;
  for (const Cycle& c : s.mandatory_cycles()) image.push_back(Cycle::of(perm[c.i], perm[c.j], perm[c.k]));
  return CycleStructure::from_cycles(s.n(), image);
}

CanonicalForm canonicalize(const CycleStructure& s) {
  const std::size_t n = s.n();
  if (n > kMaxCanonicalizeAtoms)
    throw LimitError("canonicalization enumerates n! relabelings and is capped at n = " +
                     std::to_string(kMaxCanonicalizeAtoms));
  const auto cycles = s.mandatory_cycles();
  std::vector<AtomId> perm(n);
  std::iota(perm.begin(), perm.end(), AtomId{0});
  BitVector best = s.bits();
  BitVector image(s.bits().size());
  do {
    image = BitVector(s.bits().size());
    for (const Cycle& c : cycles) image.set(cycle_index(Cycle::of(perm[c.i], perm[c.j], perm[c.k]), n));
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalForm{n, std::move(best)};
}

Canonicalizer::Canonicalizer(std::size_t n) : cycles_(static_cast<std::size_t>(cycle_count(n))) {
  if (cycles_ > 64) throw LimitError("Canonicalizer requires at most 64 cycles (n <= 6)");
  const CycleIndexer indexer(n);
  std::vector<AtomId> perm(n);
  std::iota(perm.begin(), perm.end(), AtomId{0});
  do {
    std::vector<std::uint8_t> map(cycles_);
    for (std::size_t i = 0; i < cycles_; ++i) {
      const Cycle& c = indexer.at(i);
      map[i] = static_cast<std::uint8_t>(indexer.index(Cycle::of(perm[c.i], perm[c.j], perm[c.k])));
    }
    maps_.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t Canonicalizer::canonical_word(std::uint64_t bits) const {
  std::uint64_t best = bits;
  for (const auto& map : maps_) {
    std::uint64_t image = 0;
    for (std::uint64_t rest = bits; rest; rest &= rest - 1)
      image |= std::uint64_t{1} << map[static_cast<std::size_t>(std::countr_zero(rest))];
    best = std::min(best, image);
  }
  return best;
}

std::size_t Canonicalizer::orbit_size(std::uint64_t bits) const {
  std::set<std::uint64_t> images;
  for (const auto& map : maps_) {
    std::uint64_t image = 0;
    for (std::uint64_t rest = bits; rest; rest &= rest - 1)
      image |= std::uint64_t{1} << map[static_cast<std::size_t>(std::countr_zero(rest))];
    images.insert(image);
  }
  return images.size();
}

Census census(std::size_t n, unsigned workers) {
  const std::size_t m = enumeration_cycles(n);
  const std::uint64_t total = std::uint64_t{1} << m;
  const Canonicalizer canon(n);

  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<PartialCensus> parts(workers);
  if (workers == 1) {
    parts[0] = census_block(n, canon, 0, total);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] { parts[w] = census_block(n, canon, begin, end); });
    }
    for (auto& t : threads) t.join();
  }

  Census out;
  out.n = n;
  out.total_structures = total;
  std::set<std::uint64_t> classes;
  for (auto& part : parts) {
    out.associative_labeled += part.associative;
    out.with_flexible_labeled += part.flexible;
    if (part.first_nonassociative && !out.nonassociative_example)
      out.nonassociative_example = CycleStructure(n, BitVector::from_word(m, *part.first_nonassociative));
    classes.merge(part.classes);
  }
  out.associative_classes = classes.size();
  for (std::uint64_t bits : classes) out.catalog.emplace_back(n, BitVector::from_word(m, bits));
  return out;
}

std::vector<NonAssociativeExample> find_nonassociative_examples(std::size_t n, std::size_t limit) {
  std::vector<NonAssociativeExample> out;
  StructureStream stream(n);
  while (out.size() < limit) {
    auto s = stream.next();
    if (!s) break;
    if (auto violation = find_associativity_violation(build_composition_table(*s)))
      out.push_back({std::move(*s), *violation});
  }
  return out;
}

}  // namespace randrel
