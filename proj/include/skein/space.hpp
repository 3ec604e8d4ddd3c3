#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "skein/action.hpp"
#include "skein/int_partition.hpp"
#include "skein/matrix.hpp"

namespace skein {

// Sparse vector over a space basis: sorted (basis index, coefficient) pairs.
using SparseVec = std::vector<std::pair<int, Int>>;

// A skein module with its canonical noncrossing basis and per-generator
// action tables. The tables make repeated operator application cheap, which
// the exhaustive verification sweeps rely on.
class Space {
 public:
  // Basis NC(n), NC(n,k) or NC(n,k,s) in canonical order.
  Space(int n, std::optional<int> k = std::nullopt, std::optional<int> s = std::nullopt);

  int n() const { return n_; }
  std::optional<int> k() const { return k_; }
  std::optional<int> s() const { return s_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SetPartition>& basis() const { return basis_; }
  int index_of(const SetPartition& pi) const;

  // tau_i e_j expanded over the basis (terms sorted by index).
  const SparseVec& generator_image(int i, int j) const;

  SparseVec apply_generator(int i, const SparseVec& v) const;
  SparseVec apply_word(const Word& word, const SparseVec& v) const;  // rightmost first
  SparseVec apply_perm(const Permutation& w, const SparseVec& v) const;

  SparseVec to_sparse(const NCVector& v) const;
  NCVector to_vector(const SparseVec& v) const;

  IntMatrix matrix_of_word(const Word& word) const;
  IntMatrix matrix_of(const Permutation& w) const;
  Int trace_of(const Permutation& w) const;

  // Sum over the Young subgroup of lambda's intervals, with or without sign
  // weights, applied through the module action. Uses the right-coset
  // recursion per interval, so the cost is quadratic in the interval length
  // rather than factorial.
  SparseVec apply_interval_sum(int lo, int hi, int sign, const SparseVec& v) const;
  SparseVec apply_symmetrizer(const IntPartition& lambda, int sign, const SparseVec& v) const;

  // Process-wide memoized construction.
  static const Space& get(int n, std::optional<int> k = std::nullopt,
                          std::optional<int> s = std::nullopt);

 private:
  int n_;
  std::optional<int> k_, s_;
  std::vector<SetPartition> basis_;
  std::map<SetPartition, int> index_;
  // gens_[i-1][j] = expansion of tau_i applied to basis_[j].
  std::vector<std::vector<SparseVec>> gens_;
};

}  // namespace skein
