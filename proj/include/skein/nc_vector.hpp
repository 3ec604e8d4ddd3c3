#pragma once

#include <map>
#include <string>

#include "skein/bigint.hpp"
#include "skein/set_partition.hpp"

namespace skein {

// A single set partition with a sign, as produced by the star action.
struct SignedPartition {
  int sign;  // +1 or -1
  SetPartition partition;

  bool operator==(const SignedPartition&) const = default;
};

// A sparse exact-integer combination of noncrossing partitions of {1..n}.
// Keys are kept in canonical order; zero coefficients are never stored.
class NCVector {
 public:
  NCVector() : n_(0) {}
  explicit NCVector(int n) : n_(n) {}
  // Single term; the key must be noncrossing.
  NCVector(const SetPartition& pi, Int coef = 1);

  int n() const { return n_; }
  const std::map<SetPartition, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Int coefficient(const SetPartition& pi) const;

  void add_term(const SetPartition& pi, const Int& coef);
  NCVector& operator+=(const NCVector& o);
  NCVector& operator-=(const NCVector& o);
  NCVector& operator*=(const Int& c);
  NCVector operator+(const NCVector& o) const;
  NCVector operator-(const NCVector& o) const;
  NCVector operator-() const;
  friend NCVector operator*(const Int& c, NCVector v) {
    v *= c;
    return v;
  }

  bool operator==(const NCVector&) const = default;

  // One term per line, "<signed integer> * <partition>", canonical order.
  std::string to_string() const;
  static NCVector parse(const std::string& text);

  std::string to_json() const;
  static NCVector parse_json(const std::string& text);

 private:
  int n_;
  std::map<SetPartition, Int> terms_;
};

}  // namespace skein
