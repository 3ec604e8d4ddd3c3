#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace skein {

// A set partition of {1..n} in canonical form: elements sorted within each
// block, blocks sorted by minimum element. Immutable after construction;
// equality, ordering and hashing all use the canonical form.
class SetPartition {
 public:
  SetPartition() : n_(0) {}
  // Validates that the blocks are disjoint, nonempty and cover {1..n}.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int singleton_count() const;
  int doubleton_count() const;

  // Index of the block containing i (1 <= i <= n).
  int block_index_of(int i) const;
  const std::vector<int>& block_of(int i) const;
  bool same_block(int i, int j) const { return block_index_of(i) == block_index_of(j); }

  // Number of disk-diagram edges at vertex i: 0 for singletons, 1 for
  // doubleton members, 2 otherwise.
  int valence(int i) const;

  // Swaps the two values i and i+1 (1 <= i <= n-1).
  SetPartition swap_adjacent(int i) const;
  // Relabels i -> i+1 cyclically (n -> 1).
  SetPartition rotated() const;
  // Relabels i -> n+1-i.
  SetPartition reflected() const;

  bool is_noncrossing() const;

  bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }
  bool operator<(const SetPartition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return blocks_ < o.blocks_;
  }

  // "1,3,4/2,7/5/6"; canonical block/element order on output.
  std::string to_string() const;
  // Accepts blocks and elements in any order with surrounding whitespace.
  static SetPartition parse(const std::string& text);

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_idx_;  // element -> index into blocks_, 1-based
};

struct CrossingClass {
  enum Tag { Noncrossing, AlmostNoncrossing, Crossing };
  Tag tag;
  // For AlmostNoncrossing: the indices i with swap_adjacent(i) noncrossing.
  std::set<int> crossing_indices;

  bool operator==(const CrossingClass&) const = default;
};

// Noncrossing iff no a<b<c<d with a~c, b~d in distinct blocks; almost
// noncrossing iff crossing but some adjacent swap repairs it (returning
// exactly the set of repairing indices); crossing otherwise.
CrossingClass classify(const SetPartition& pi);

// Partition with blocks of consecutive intervals of the given lengths
// (weakly decreasing); the canonical orbit representative.
SetPartition interval_partition(const std::vector<int>& lengths);

}  // namespace skein
