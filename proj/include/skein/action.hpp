#pragma once

#include "skein/nc_vector.hpp"
#include "skein/permutation.hpp"

namespace skein {

// Resolution of an almost noncrossing partition into a signed sum of
// noncrossing partitions, all with the same block and singleton counts.
// Picks the smallest repairing index when several exist; the result is
// independent of the choice.
NCVector skein_resolve(const SetPartition& pi);
// Same, resolving at a given repairing index (swap_adjacent(i) must be
// noncrossing).
NCVector skein_resolve_at(const SetPartition& pi, int i);

// Full four-term resolution at a given repairing index: no terms are
// dropped for small blocks, so singleton counts may grow.
NCVector skein_resolve_full_at(const SetPartition& pi, int i);

// Sign-twisted swap on arbitrary set partitions: the sign is negative
// unless {i} or {i+1} is a singleton block.
SignedPartition signed_swap(int i, const SetPartition& pi);

// The signed permutation action assembled from signed swaps along a reduced
// word; the partition component is apply_perm(w, pi).
SignedPartition star_act(const Permutation& w, const SetPartition& pi);

// Action of the adjacent transposition s_i on a noncrossing partition:
// plain swap if the result stays noncrossing, negation if i and i+1 are
// blockmates, skein resolution otherwise.
NCVector act_adjacent(int i, const SetPartition& pi);
NCVector act_adjacent(int i, const NCVector& v);

// Variant using only full four-term resolutions; preserves block counts but
// may increase singleton counts.
NCVector act_adjacent_full(int i, const SetPartition& pi);
NCVector act_adjacent_full(int i, const NCVector& v);

// Applies the product s_{i1} s_{i2} ... s_{ik}: rightmost letter first.
NCVector act_word(const Word& word, const NCVector& v);
NCVector act_word_full(const Word& word, const NCVector& v);

// Action of an arbitrary permutation through a deterministic reduced word;
// independent of the choice of word.
NCVector act_perm(const Permutation& w, const NCVector& v);
NCVector act_perm(const Permutation& w, const SetPartition& pi);

// Two distinguished no-singleton basis elements (2k <= n, k >= 1):
// {1, 2k, 2k+1, ..., n} with the concentric pairs {2,2k-1}, ..., {k,k+1},
SetPartition nested_pairs_element(int n, int k);
// and {1, ..., n-2k+2} followed by the adjacent pairs {n-2k+3, n-2k+4},
// ..., {n-1, n}.
SetPartition adjacent_pairs_element(int n, int k);

}  // namespace skein
