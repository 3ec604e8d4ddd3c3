#pragma once

#include <optional>
#include <vector>

#include "skein/set_partition.hpp"

namespace skein {

// Complete duplicate-free list in canonical order, optionally restricted to
// a fixed block count k, singleton count s, and/or the noncrossing class.
std::vector<SetPartition> enumerate_partitions(int n, std::optional<int> k = std::nullopt,
                                               std::optional<int> s = std::nullopt,
                                               bool noncrossing_only = false);

inline std::vector<SetPartition> noncrossing_partitions(int n, std::optional<int> k = std::nullopt,
                                                        std::optional<int> s = std::nullopt) {
  return enumerate_partitions(n, k, s, true);
}

// k-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace skein
