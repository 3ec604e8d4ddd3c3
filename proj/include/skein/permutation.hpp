#pragma once

#include <string>
#include <vector>

#include "skein/set_partition.hpp"

namespace skein {

// Word in the adjacent transpositions s_i; letters are 1-based indices.
// A word [i1, i2, ..., ik] denotes the product s_{i1} s_{i2} ... s_{ik}.
using Word = std::vector<int>;

// A permutation of {1..n}, stored in one-line notation.
// Composition convention throughout: (u*v)(x) = u(v(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  int n() const { return static_cast<int>(images_.size()); }
  int of(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& v) const;
  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  // Cycle lengths in weakly decreasing order.
  std::vector<int> cycle_type() const;

  std::string to_one_line() const;   // "5 1 2 6 3 8 4 7"
  std::string to_cycles() const;     // "(1,5,3)(2,6)", "()" for identity
  // Accepts one-line or cycle notation; n must be supplied for cycle input
  // (and checked against one-line input).
  static Permutation parse(const std::string& text, int n);

  static Permutation adjacent_transposition(int n, int i);
  static Permutation transposition(int n, int a, int b);
  static Permutation long_cycle(int n);    // i -> i+1, n -> 1
  static Permutation long_element(int n);  // i -> n+1-i

 private:
  std::vector<int> images_;
};

// Evaluates a word to the permutation s_{i1} s_{i2} ... s_{ik} in S_n.
Permutation word_to_perm(const Word& word, int n);

// A reduced word for w (length = inversion count): repeatedly routes the
// largest displaced value home.
Word reduced_word(const Permutation& w);
// A different deterministic reduced word (leftmost descent removal); used to
// cross-check word independence.
Word reduced_word_lex(const Permutation& w);

// Transport of block structure: w(i) ~ w(j) in the image iff i ~ j.
SetPartition apply_perm(const Permutation& w, const SetPartition& pi);

}  // namespace skein
