#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

// Malformed text input (partitions, permutations, vectors). Carries the
// character position of the first offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// A polynomial evaluated at a root of unity failed to collapse to an
// integer; the candidate polynomial is not integer-valued at that root.
class NonIntegerValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace skein
