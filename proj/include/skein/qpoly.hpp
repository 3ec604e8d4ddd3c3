#pragma once

#include <string>
#include <vector>

#include "skein/bigint.hpp"
#include "skein/int_partition.hpp"

namespace skein {

// Integer-coefficient polynomial in q; coefficient index = power of q.
// Trailing zeros are trimmed and the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<Int> coeffs);
  explicit QPoly(std::vector<Int> coeffs);
  static QPoly constant(Int c);
  static QPoly monomial(int power, Int c = 1);

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Int coeff(int i) const;
  Int at_one() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  bool operator==(const QPoly&) const = default;

  // Exact division; throws std::domain_error if the remainder is nonzero or
  // the divisor's leading coefficient does not divide along the way.
  QPoly exact_div(const QPoly& d) const;
  // Remainder of division by a monic divisor.
  QPoly mod_monic(const QPoly& d) const;
  // Substitutes q -> q^e.
  QPoly compose_power(int e) const;

  std::string to_string() const;  // "1 + q + 2q^2"

 private:
  void trim();
  std::vector<Int> c_;
};

// [r]_q = 1 + q + ... + q^(r-1).
QPoly q_int(int r);
// [m]!_q.
QPoly q_factorial(int m);
// Gaussian binomial; zero for k outside [0, n].
QPoly q_binomial(int n, int k);
// [2n n]_q / [n+1]_q.
QPoly q_catalan(int n);
// [n k]_q [n k-1]_q / [n]_q, in the unshifted form; zero when no partition
// of [n] into k blocks exists.
QPoly q_narayana(int n, int k);
// q^(k(k-1)) times q_narayana; agrees with the unshifted form at every
// n-th root of unity.
QPoly q_narayana_shifted(int n, int k);
// [k]_q/([n-k]_q [n-k+1]_q) * [n]!_q/(([k]!_q)^2 [n-2k]!_q): the sieving
// polynomial for noncrossing partitions with k blocks and no singletons;
// equals the q-hook-length polynomial of the flag shape (k, k, 1^(n-2k)).
// Conventions: 1 when n = k = 0, else 0 when k = 0 or 2k > n.
QPoly flag_poly(int n, int k);
// [n]!_q / prod over cells [hook]_q.
QPoly q_hook_length(const IntPartition& lambda);
// q^(b(lambda)) * q_hook_length(lambda).
QPoly fake_degree(const IntPartition& lambda);

// The m-th cyclotomic polynomial (memoized).
const QPoly& cyclotomic(int m);

// A residue in Z[q]/Phi_m(q); degree strictly below deg Phi_m.
class CyclotomicInteger {
 public:
  CyclotomicInteger(int order, const QPoly& value);
  int order() const { return order_; }
  const QPoly& residue() const { return residue_; }
  bool is_integer() const { return residue_.degree() <= 0; }
  Int as_integer() const;  // throws NonIntegerValue if not constant

 private:
  int order_;
  QPoly residue_;
};

// p evaluated at zeta^d for zeta a primitive m-th root of unity; exact.
// Throws NonIntegerValue when the value is not a rational integer.
Int eval_at_root(const QPoly& p, int m, int d);

}  // namespace skein
