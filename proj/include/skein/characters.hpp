#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/int_partition.hpp"
#include "skein/matrix.hpp"
#include "skein/nc_vector.hpp"
#include "skein/permutation.hpp"
#include "skein/space.hpp"

namespace skein {

// A conjugacy class of S_n, recorded by its cycle type.
using CycleType = IntPartition;

// Representative with consecutive cycles (1..mu_1)(mu_1+1..mu_1+mu_2)...
Permutation class_representative(const CycleType& mu);
// |class| = n! / z_mu.
Int class_size(const CycleType& mu);
// Cycle type of w^d where w is a single m-cycle padded with n-m fixed points.
CycleType power_of_cycle_type(int n, int m, int d);

// Irreducible character chi^lambda evaluated on the class mu, via recursive
// border-strip removal on the beta-set.
Int mn_character(const IntPartition& lambda, const CycleType& mu);

// Column j = expansion of w acting on the j-th canonical basis element of
// NC(n[,k[,s]]).
IntMatrix representing_matrix(const Permutation& w, int n, std::optional<int> k = std::nullopt,
                              std::optional<int> s = std::nullopt);

// Trace of the representing matrix; a class function.
Int character(const Permutation& w, int n, std::optional<int> k = std::nullopt,
              std::optional<int> s = std::nullopt);
Int character(const CycleType& mu, int n, std::optional<int> k = std::nullopt,
              std::optional<int> s = std::nullopt);

// Sum (resp. sign-weighted sum) over the Young subgroup of lambda's
// intervals, applied through the module action. Shapes smaller than the
// ground set act on the leading interval, the tail being implicit
// singletons.
NCVector apply_symmetrizer(const IntPartition& lambda, int sign, const NCVector& v);

// All shapes obtained from mu by adding a horizontal strip of size s, each
// with multiplicity one: the decomposition of the induction of S^mu tensor
// a trivial factor of rank s.
std::vector<IntPartition> pieri_induce(const IntPartition& mu, int s);

struct IsotypeRow {
  CycleType cls;
  Int module_trace;
  Int predicted;
  bool ok;
};

struct IsotypeReport {
  int n, k, s;
  std::vector<IntPartition> constituents;
  std::vector<IsotypeRow> rows;
  bool pass;
};

// PASS iff for every class mu of S_n the trace on NC(n,k,s) equals the sum
// of chi^lambda(mu) over the horizontal-strip induction of the flag shape
// (k-s, k-s, 1^(n-2k+s)).
IsotypeReport verify_isotype(int n, int k, int s);

// Sparse integer element of the group algebra; the explicit (slow) route to
// symmetrizer sums, kept as an independent cross-check.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}
  int n() const { return n_; }
  const std::map<Permutation, Int>& terms() const { return terms_; }
  void add_term(const Permutation& w, const Int& c);
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  NCVector apply(const NCVector& v) const;

  // Sum of all permutations of an interval [lo, hi] inside S_n, optionally
  // sign-weighted.
  static GroupAlgebraElement interval_sum(int n, int lo, int hi, int sign);
  static GroupAlgebraElement young_sum(int n, const IntPartition& lambda, int sign);

 private:
  int n_;
  std::map<Permutation, Int> terms_;
};

}  // namespace skein
