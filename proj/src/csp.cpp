#include "skein/csp.hpp"

#include <stdexcept>

#include "skein/characters.hpp"
#include "skein/enumerate.hpp"
#include "skein/util.hpp"

namespace skein {

CspFamily parse_family(const std::string& name) {
  if (name == "catalan") return CspFamily::Catalan;
  if (name == "narayana") return CspFamily::Narayana;
  if (name == "flag") return CspFamily::Flag;
  if (name == "subsets") return CspFamily::Subsets;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(CspFamily f) {
  switch (f) {
    case CspFamily::Catalan: return "catalan";
    case CspFamily::Narayana: return "narayana";
    case CspFamily::Flag: return "flag";
    case CspFamily::Subsets: return "subsets";
  }
  return "?";
}

long long count_fixed(CspFamily family, int n, std::optional<int> k, int d) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  long long count = 0;
  if (family == CspFamily::Subsets) {
    if (!k) throw std::invalid_argument("subsets family needs k");
    for (const auto& sub : subsets(n, *k)) {
      std::vector<char> in(n + 1, 0);
      for (int e : sub) in[e] = 1;
      bool fixed = true;
      for (int e : sub)
        if (!in[(e - 1 + d) % n + 1]) {
          fixed = false;
          break;
        }
      count += fixed;
    }
    return count;
  }
  std::optional<int> blocks = k, singles;
  if (family == CspFamily::Catalan) blocks = std::nullopt;
  if (family == CspFamily::Flag) singles = 0;
  if ((family == CspFamily::Narayana || family == CspFamily::Flag) && !k)
    throw std::invalid_argument("family needs k");
  for (const auto& pi : noncrossing_partitions(n, blocks, singles)) {
    SetPartition rot = pi;
    for (int t = 0; t < d % n; ++t) rot = rot.rotated();
    count += (rot == pi);
  }
  return count;
}

namespace {

QPoly family_polynomial(CspFamily family, int n, std::optional<int> k) {
  switch (family) {
    case CspFamily::Catalan: return q_catalan(n);
    case CspFamily::Narayana: return q_narayana(n, *k);
    case CspFamily::Flag: return flag_poly(n, *k);
    case CspFamily::Subsets: return q_binomial(n, *k);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

CspReport verify_csp(CspFamily family, int n, std::optional<int> k, int jobs) {
  CspReport rep;
  rep.family = family;
  rep.n = n;
  rep.k = k;
  rep.polynomial = family_polynomial(family, n, k);
  rep.rows.resize(n);
  parallel_for(n, jobs, [&](int d) {
    long long fixed = count_fixed(family, n, k, d);
    Int eval = eval_at_root(rep.polynomial, n, d);
    rep.rows[d] = {d, fixed, eval, Int(fixed) == eval};
  });
  rep.pass = true;
  for (const auto& row : rep.rows) rep.pass = rep.pass && row.ok;
  return rep;
}

SpringerReport springer_check(const IntPartition& lambda) {
  SpringerReport rep;
  rep.lambda = lambda;
  rep.pass = true;
  int n = lambda.size();
  QPoly fd = fake_degree(lambda);
  for (int m : {n, n - 1}) {
    if (m < 1) continue;
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      CycleType cls = power_of_cycle_type(n, m, d);
      Int chi = mn_character(lambda, cls);
      Int eval = eval_at_root(fd, m, d);
      bool ok = chi == eval;
      rep.pass = rep.pass && ok;
      rep.rows.push_back({m, d, chi, eval, ok});
    }
  }
  return rep;
}

bool chu_vandermonde_check(int m, int n, int k) {
  if (m < 0 || n < 0 || k < 0) throw std::invalid_argument("parameters must be nonnegative");
  QPoly lhs = q_binomial(m + n, k);
  QPoly rhs;
  for (int j = 0; j <= k; ++j) {
    QPoly term = q_binomial(m, k - j) * q_binomial(n, j);
    if (term.is_zero()) continue;  // nonzero forces k-j <= m, so the shift is >= 0
    rhs = rhs + QPoly::monomial(j * (m - k + j)) * term;
  }
  return lhs == rhs;
}

}  // namespace skein
