#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#ifndef RANDREL_MAX_DIVERSITY_ATOMS
#define RANDREL_MAX_DIVERSITY_ATOMS 256
#endif

namespace randrel {

/// Diversity atoms are dense ids 0..n-1; the identity atom 1' is id n.
using AtomId = std::uint32_t;

/// Compile-time cap on the number of diversity atoms (configure with
/// -DRANDREL_MAX_DIVERSITY_ATOMS=...).
inline constexpr std::size_t kMaxDiversityAtoms = RANDREL_MAX_DIVERSITY_ATOMS;

constexpr AtomId identity_atom(std::size_t n) noexcept { return static_cast<AtomId>(n); }

/// Fixed-capacity bit mask over the n+1 atoms of an algebra.
class AtomSet {
 public:
  static constexpr std::size_t kCapacity = kMaxDiversityAtoms + 1;
  static constexpr std::size_t kWords = (kCapacity + 63) / 64;

  constexpr AtomSet() = default;

  static AtomSet single(AtomId a) {
    AtomSet s;
    s.set(a);
    return s;
  }

  /// Atoms 0..count-1.
  static AtomSet prefix(std::size_t count) {
    AtomSet s;
    for (std::size_t w = 0; w < kWords && count > 0; ++w) {
      if (count >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        count -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << count) - 1;
        count = 0;
      }
    }
    return s;
  }

  void set(AtomId a) { words_[a >> 6] |= std::uint64_t{1} << (a & 63); }
  void reset(AtomId a) { words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }
  bool test(AtomId a) const { return (words_[a >> 6] >> (a & 63)) & 1U; }

  bool any() const {
    std::uint64_t acc = 0;
    for (auto w : words_) acc |= w;
    return acc != 0;
  }
  bool empty() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool intersects(const AtomSet& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < kWords; ++i) acc |= words_[i] & o.words_[i];
    return acc != 0;
  }

  bool is_subset_of(const AtomSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  AtomSet& operator|=(const AtomSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  AtomSet& operator&=(const AtomSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend bool operator==(const AtomSet&, const AtomSet&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto b = static_cast<AtomId>(std::countr_zero(bits));
        f(static_cast<AtomId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<AtomId> to_vector() const {
    std::vector<AtomId> out;
    for_each([&](AtomId a) { out.push_back(a); });
    return out;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace randrel
