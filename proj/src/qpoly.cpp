#include "skein/qpoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

QPoly::QPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(Int c) { return QPoly({std::move(c)}); }

QPoly QPoly::monomial(int power, Int c) {
  std::vector<Int> v(power + 1);
  v[power] = std::move(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Int QPoly::at_one() const {
  Int s = 0;
  for (const Int& x : c_) s += x;
  return s;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  std::vector<Int> r = c_;
  for (Int& x : r) x = -x;
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return QPoly();
  std::vector<Int> rem = c_;
  int dd = d.degree();
  const Int& lead = d.c_.back();
  if (degree() < dd) throw std::domain_error("inexact polynomial division");
  std::vector<Int> quot(degree() - dd + 1);
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) throw std::domain_error("inexact polynomial division");
    Int q = rem[i] / lead;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  for (const Int& x : rem)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return QPoly(std::move(quot));
}

QPoly QPoly::mod_monic(const QPoly& d) const {
  if (d.is_zero() || d.c_.back() != 1) throw std::domain_error("divisor must be monic");
  std::vector<Int> rem = c_;
  int dd = d.degree();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Int q = rem[i];
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  rem.resize(std::min<std::size_t>(rem.size(), dd));
  return QPoly(std::move(rem));
}

QPoly QPoly::compose_power(int e) const {
  if (e <= 0) throw std::invalid_argument("power must be positive");
  if (is_zero()) return QPoly();
  std::vector<Int> r(static_cast<std::size_t>(degree()) * e + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
  return QPoly(std::move(r));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    Int mag = abs(a);
    if (mag != 1 || i == 0) out += mag.str();
    if (i == 1) out += "q";
    if (i > 1) out += "q^" + std::to_string(i);
  }
  return out;
}

QPoly q_int(int r) {
  if (r < 0) throw std::invalid_argument("negative q-integer");
  std::vector<Int> c(r, Int(1));
  return QPoly(std::move(c));
}

QPoly q_factorial(int m) {
  QPoly f = QPoly::constant(1);
  for (int i = 1; i <= m; ++i) f = f * q_int(i);
  return f;
}

QPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return QPoly();
  QPoly num = QPoly::constant(1);
  for (int i = 0; i < k; ++i) num = num * q_int(n - i);
  return num.exact_div(q_factorial(k));
}

QPoly q_catalan(int n) { return q_binomial(2 * n, n).exact_div(q_int(n + 1)); }

QPoly q_narayana(int n, int k) {
  if (k < 1 || k > n) return n == 0 && k == 0 ? QPoly::constant(1) : QPoly();
  return (q_binomial(n, k) * q_binomial(n, k - 1)).exact_div(q_int(n));
}

QPoly q_narayana_shifted(int n, int k) {
  QPoly nar = q_narayana(n, k);
  if (nar.is_zero()) return nar;
  return QPoly::monomial(k * (k - 1)) * nar;
}

QPoly flag_poly(int n, int k) {
  if (n == 0 && k == 0) return QPoly::constant(1);
  if (k < 1 || 2 * k > n) return QPoly();
  QPoly num = q_int(k) * q_factorial(n);
  QPoly den = q_int(n - k) * q_int(n - k + 1) * q_factorial(k) * q_factorial(k) *
              q_factorial(n - 2 * k);
  return num.exact_div(den);
}

QPoly q_hook_length(const IntPartition& lambda) {
  QPoly num = q_factorial(lambda.size());
  QPoly den = QPoly::constant(1);
  for (int h : lambda.hooks()) den = den * q_int(h);
  return num.exact_div(den);
}

QPoly fake_degree(const IntPartition& lambda) {
  return QPoly::monomial(static_cast<int>(lambda.b_statistic())) * q_hook_length(lambda);
}

const QPoly& cyclotomic(int m) {
  static std::map<int, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  // Phi_m = (q^m - 1) / prod_{d | m, d < m} Phi_d, computed without
  // re-locking through plain recursion on the cached map.
  std::vector<int> pending{m};
  while (!pending.empty()) {
    int t = pending.back();
    if (cache.count(t)) {
      pending.pop_back();
      continue;
    }
    bool ready = true;
    for (int d = 1; d < t; ++d)
      if (t % d == 0 && !cache.count(d)) {
        pending.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    QPoly num = QPoly::monomial(t) - QPoly::constant(1);
    QPoly den = QPoly::constant(1);
    for (int d = 1; d < t; ++d)
      if (t % d == 0) den = den * cache.at(d);
    cache.emplace(t, num.exact_div(den));
    pending.pop_back();
  }
  return cache.at(m);
}

CyclotomicInteger::CyclotomicInteger(int order, const QPoly& value) : order_(order) {
  residue_ = value.mod_monic(cyclotomic(order));
}

Int CyclotomicInteger::as_integer() const {
  if (!is_integer())
    throw NonIntegerValue("residue of degree " + std::to_string(residue_.degree()) +
                          " modulo the order-" + std::to_string(order_) +
                          " cyclotomic polynomial is not an integer");
  return residue_.coeff(0);
}

Int eval_at_root(const QPoly& p, int m, int d) {
  if (m < 1) throw std::invalid_argument("root order must be positive");
  if (d < 0) throw std::invalid_argument("power must be nonnegative");
  d %= m;
  if (d == 0) return p.at_one();
  // zeta_m^d is a primitive e-th root with e = m/gcd and exponent
  // t = d/gcd coprime to e; fold exponents of q^t modulo e, then reduce.
  int g = std::gcd(m, d);
  int e = m / g;
  int t = (d / g) % e;
  std::vector<Int> folded(e);
  for (int i = 0; i <= p.degree(); ++i) {
    Int c = p.coeff(i);
    if (c != 0) folded[static_cast<std::size_t>(i) * t % e] += c;
  }
  return CyclotomicInteger(e, QPoly(std::move(folded))).as_integer();
}

}  // namespace skein
