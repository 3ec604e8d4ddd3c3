#pragma once

#include <string>
#include <vector>

#include "skein/characters.hpp"
#include "skein/matrix.hpp"
#include "skein/nc_vector.hpp"

namespace skein {

// A noncrossing partition with an integer scale factor, as produced by a
// diagram-algebra generator (loop value -2).
struct ScaledPartition {
  Int scalar;
  SetPartition partition;

  bool operator==(const ScaledPartition&) const = default;
};

// Diagram generator at vertices i, i+1 on a noncrossing partition without
// singleton blocks: -2 pi when {i,i+1} is a doubleton block (loop), zero
// when i and i+1 are blockmates in a larger block (the pinch strands a
// leg), otherwise the partition with blocks {i,i+1} and the union of the
// two remainders. Zero is returned as scalar 0.
ScaledPartition tl_act(int i, const SetPartition& pi);

// The induced symmetric-group operator v + t_i(v).
NCVector tl_sn_act(int i, const NCVector& v);

// Matrix of t_i on the canonical basis of NC(n,k,0).
IntMatrix tl_generator_matrix(int i, int n, int k);
// Matrix of w under s_i -> 1 + t_i, multiplied along a reduced word.
IntMatrix tl_matrix_of(const Permutation& w, int n, int k);

struct TlCompareRow {
  CycleType cls;
  Int skein_trace;
  Int tl_trace;
};

struct TlCompareReport {
  int n, k;
  std::vector<TlCompareRow> rows;
  bool characters_equal;
  bool generator_matrices_equal;     // skein vs diagram-induced, all i
  bool doubleton_span_is_submodule;  // span of >= 1 doubleton closed under all 1 + t_i
  bool doubleton_span_proper;        // nonzero and proper (reducibility witness)
  // Multiplicity of every >= 3-row irreducible in the diagram module is 0.
  bool two_row_constituents_only;
};

TlCompareReport compare_modules(int n, int k);

struct FiltrationRow {
  int min_doubletons;
  int dim;
  bool closed;
};

struct FiltrationReport {
  int n, k;
  std::vector<FiltrationRow> rows;
  bool pass;
};

// Each span of basis elements with at least d doubletons must be closed
// under every operator 1 + t_i.
FiltrationReport doubleton_filtration_check(int n, int k);

}  // namespace skein
