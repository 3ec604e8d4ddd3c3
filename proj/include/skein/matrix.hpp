#pragma once

#include <string>
#include <vector>

#include "skein/bigint.hpp"

namespace skein {

// Dense exact-integer matrix; row/column order is bound to the canonical
// enumeration of whichever basis produced it.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  static IntMatrix identity(int n);

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix&) const = default;

  Int trace() const;
  bool is_zero() const;

  std::string to_string() const;  // aligned text
  std::string to_json() const;    // nested arrays

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

}  // namespace skein
