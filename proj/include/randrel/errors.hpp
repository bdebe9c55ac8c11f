#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace randrel {

/// Malformed `.cyc` input. line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A request exceeds a hard size cap (enumeration, canonicalization, atom count).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace randrel
