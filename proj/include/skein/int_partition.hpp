#pragma once

#include <string>
#include <vector>

#include "skein/bigint.hpp"

namespace skein {

// An integer partition: weakly decreasing positive parts.
class IntPartition {
 public:
  IntPartition() = default;
  explicit IntPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < rows() ? parts_[i] : 0; }  // 0-based, zero-padded

  IntPartition conjugate() const;
  // b(lambda) = sum (i-1)*lambda_i.
  long long b_statistic() const;
  // Hook length of the cell in row r, column c (0-based).
  int hook(int r, int c) const;
  std::vector<int> hooks() const;  // all cells, row-major

  bool operator==(const IntPartition&) const = default;
  bool operator<(const IntPartition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;                       // "4,2,2,1"
  static IntPartition parse(const std::string& text);  // "4,2,2,1" or "4 2 2 1"

 private:
  std::vector<int> parts_;
};

// True iff every prefix sum of lambda is <= the matching prefix sum of mu
// (zero-padded); sizes must agree.
bool dominance_leq(const IntPartition& lambda, const IntPartition& mu);

// n! / product of hook lengths.
Int hook_dim(const IntPartition& lambda);

// (k, k, 1^(n-2k)); k = 0 degenerates to a single column (1^n).
IntPartition flag_shape(int n, int k);

// All partitions of n in a fixed (reverse lexicographic) order.
std::vector<IntPartition> partitions_of(int n);

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace skein
