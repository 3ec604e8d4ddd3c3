#include "skein/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skein {

Permutation class_representative(const CycleType& mu) {
  int n = mu.size();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  int start = 1;
  for (int part : mu.parts()) {
    for (int i = start; i < start + part - 1; ++i) img[i - 1] = i + 1;
    img[start + part - 2] = start;
    start += part;
  }
  return Permutation(std::move(img));
}

Int class_size(const CycleType& mu) {
  // n! / z_mu with z_mu = prod(parts) * prod(multiplicity!).
  Int z = 1;
  std::map<int, int> mult;
  for (int part : mu.parts()) {
    z *= part;
    ++mult[part];
  }
  for (const auto& [part, m] : mult) z *= factorial(m);
  return factorial(mu.size()) / z;
}

CycleType power_of_cycle_type(int n, int m, int d) {
  int g = d == 0 ? m : std::gcd(m, d);
  std::vector<int> parts;
  for (int i = 0; i < g; ++i) parts.push_back(m / g);
  for (int i = 0; i < n - m; ++i) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return CycleType(parts);
}

namespace {

Int mn_rec(std::vector<int> beta, const std::vector<int>& mu, std::size_t mi) {
  if (mi == mu.size()) return 1;
  int t = mu[mi];
  Int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    if (b < t) continue;
    int target = b - t;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < b) ++between;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[i] = target;
    Int sub = mn_rec(std::move(next), mu, mi + 1);
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

Int mn_character(const IntPartition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character size mismatch");
  int rows = std::max(lambda.rows(), 1);
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lambda.part(i) + (rows - 1 - i);
  // Strips are removed largest part first; any fixed order is valid.
  std::vector<int> parts = mu.parts();
  std::sort(parts.rbegin(), parts.rend());
  return mn_rec(std::move(beta), parts, 0);
}

IntMatrix representing_matrix(const Permutation& w, int n, std::optional<int> k,
                              std::optional<int> s) {
  return Space::get(n, k, s).matrix_of(w);
}

Int character(const Permutation& w, int n, std::optional<int> k, std::optional<int> s) {
  return Space::get(n, k, s).trace_of(w);
}

Int character(const CycleType& mu, int n, std::optional<int> k, std::optional<int> s) {
  if (mu.size() != n) throw std::invalid_argument("cycle type size mismatch");
  return character(class_representative(mu), n, k, s);
}

NCVector apply_symmetrizer(const IntPartition& lambda, int sign, const NCVector& v) {
  if (v.is_zero()) return v;
  if (lambda.size() > v.n()) throw std::invalid_argument("shape larger than the ground set");
  const Space& sp = Space::get(v.n());
  return sp.to_vector(sp.apply_symmetrizer(lambda, sign, sp.to_sparse(v)));
}

std::vector<IntPartition> pieri_induce(const IntPartition& mu, int s) {
  if (s < 0) throw std::invalid_argument("strip size must be nonnegative");
  std::vector<IntPartition> out;
  int rows = mu.rows() + 1;
  // lambda_i ranges over [mu_i, mu_{i-1}] with sum |mu| + s; the horizontal
  // strip condition is lambda_{i} <= mu_{i-1}.
  std::vector<int> lam(rows);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rows) {
      if (remaining != 0) return;
      std::vector<int> parts;
      for (int x : lam)
        if (x > 0) parts.push_back(x);
      out.push_back(IntPartition(parts));
      return;
    }
    int lo = mu.part(i);
    int hi = i == 0 ? mu.part(0) + remaining : std::min(mu.part(i - 1), mu.part(i) + remaining);
    for (int x = lo; x <= hi; ++x) {
      lam[i] = x;
      self(self, i + 1, remaining - (x - lo));
    }
    lam[i] = 0;
  };
  rec(rec, 0, s);
  std::sort(out.begin(), out.end());
  return out;
}

IsotypeReport verify_isotype(int n, int k, int s) {
  if (s > k || 2 * k - s > n) throw std::invalid_argument("no such family");
  IsotypeReport rep;
  rep.n = n;
  rep.k = k;
  rep.s = s;
  rep.constituents = pieri_induce(flag_shape(n - s, k - s), s);
  rep.pass = true;
  for (const auto& mu : partitions_of(n)) {
    Int lhs = character(mu, n, k, s);
    Int rhs = 0;
    for (const auto& lam : rep.constituents) rhs += mn_character(lam, mu);
    bool ok = lhs == rhs;
    rep.pass = rep.pass && ok;
    rep.rows.push_back({mu, lhs, rhs, ok});
  }
  return rep;
}

void GroupAlgebraElement::add_term(const Permutation& w, const Int& c) {
  if (c == 0) return;
  if (w.n() != n_) throw std::invalid_argument("size mismatch");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(n_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_) r.add_term(u * v, cu * cv);
  return r;
}

NCVector GroupAlgebraElement::apply(const NCVector& v) const {
  NCVector out(v.n());
  for (const auto& [w, c] : terms_) out += c * act_perm(w, v);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::interval_sum(int n, int lo, int hi, int sign) {
  GroupAlgebraElement out(n);
  std::vector<int> vals;
  for (int x = lo; x <= hi; ++x) vals.push_back(x);
  std::sort(vals.begin(), vals.end());
  do {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int t = 0; t < static_cast<int>(vals.size()); ++t) img[lo + t - 1] = vals[t];
    Permutation w(std::move(img));
    out.add_term(w, sign < 0 ? Int(w.sign()) : Int(1));
  } while (std::next_permutation(vals.begin(), vals.end()));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::young_sum(int n, const IntPartition& lambda, int sign) {
  GroupAlgebraElement out(n);
  out.add_term(Permutation(n), 1);
  int start = 1;
  for (int part : lambda.parts()) {
    out = out * interval_sum(n, start, start + part - 1, sign);
    start += part;
  }
  return out;
}

}  // namespace skein
