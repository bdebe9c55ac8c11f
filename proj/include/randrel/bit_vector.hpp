#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randrel {

/// Dynamically sized bit vector. Ordering compares the bits as an unsigned
/// integer with bit 0 least significant.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  /// Low `size` bits of `value`; size must be <= 64.
  static BitVector from_word(std::size_t size, std::uint64_t value);

  std::size_t size() const noexcept { return size_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const auto mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::size_t count() const;
  bool is_subset_of(const BitVector& other) const;

  /// Value of the vector when size() <= 64.
  std::uint64_t to_word() const;

  /// Hex rendering, most significant digit first, padded to ceil(size/4) digits.
  std::string to_hex() const;
  /// Inverse of to_hex; throws std::invalid_argument on bad digits, wrong
  /// length, or bits set beyond `size`.
  static BitVector from_hex(std::size_t size, std::string_view hex);

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace randrel
