#pragma once

#include <utility>
#include <vector>

#include "skein/action.hpp"
#include "skein/int_partition.hpp"

namespace skein {

// The deterministic conjugator: lambda is the block-size multiset sorted
// decreasing, and w sends the j-th block (size descending, ties by minimum
// element) order-preservingly onto the j-th interval of the canonical
// representative interval_partition(lambda). Then apply_perm(w, pi) equals
// that representative.
std::pair<Permutation, IntPartition> conjugator_to_canonical(const SetPartition& pi);

// Equivariant resolution of an arbitrary set partition into an integer
// combination of noncrossing partitions: the identity on noncrossing input,
// minus the skein resolution on almost noncrossing input.
NCVector project(const SetPartition& pi);

// Same map computed through any w with apply_perm(w, pi) noncrossing.
NCVector project_via(const SetPartition& pi, const Permutation& w);

// Generators of the stabilizer of interval_partition(lambda): adjacent
// transpositions inside blocks, and order-preserving swaps of consecutive
// equal-size blocks.
std::vector<Permutation> stabilizer_generators(const IntPartition& lambda);

}  // namespace skein
