#include "randrel/bit_vector.hpp"

#include <bit>
#include <stdexcept>

namespace randrel {

BitVector BitVector::from_word(std::size_t size, std::uint64_t value) {
  if (size > 64) throw std::invalid_argument("BitVector::from_word: size exceeds 64");
  BitVector v(size);
  if (size == 0) return v;
  if (size < 64) value &= (std::uint64_t{1} << size) - 1;
  v.words_[0] = value;
  return v;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  if (size_ != other.size_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::uint64_t BitVector::to_word() const {
  if (size_ > 64) throw std::logic_error("BitVector::to_word: size exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (size_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      if (i < size_ && test(i)) nibble |= 1U << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

BitVector BitVector::from_hex(std::size_t size, std::string_view hex) {
  const std::size_t digits = (size + 3) / 4;
  if (hex.size() != digits)
    throw std::invalid_argument("expected " + std::to_string(digits) + " hex digits, got " +
                                std::to_string(hex.size()));
  BitVector v(size);
  for (std::size_t d = 0; d < digits; ++d) {
    const char ch = hex[digits - 1 - d];
    unsigned nibble = 0;
    if (ch >= '0' && ch <= '9')
      nibble = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f')
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'F')
      nibble = static_cast<unsigned>(ch - 'A' + 10);
    else
      throw std::invalid_argument(std::string("invalid hex digit '") + ch + "'");
    for (std::size_t b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1U)) continue;
      const std::size_t i = d * 4 + b;
      if (i >= size) throw std::invalid_argument("hex value sets bits beyond the cycle count");
      v.set(i);
    }
  }
  return v;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace randrel
