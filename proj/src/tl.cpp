#include "skein/tl.hpp"

#include <stdexcept>

#include "skein/enumerate.hpp"

namespace skein {

ScaledPartition tl_act(int i, const SetPartition& pi) {
  if (i < 1 || i >= pi.n()) throw std::out_of_range("generator index out of range");
  if (!pi.is_noncrossing()) throw std::invalid_argument("input must be noncrossing");
  if (pi.valence(i) == 0 || pi.valence(i + 1) == 0)
    throw std::invalid_argument("diagram action undefined on singletons at i or i+1");
  if (pi.same_block(i, i + 1)) {
    // A doubleton closes into a loop (factor -2). Pinching a larger block
    // strands a leg, which kills the diagram; -2pi there would break the
    // defining relations (already t1 t2 t1 = t1 fails on the one-block
    // module).
    if (pi.block_of(i).size() == 2) return {-2, pi};
    return {0, pi};
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> merged;
  int bi = pi.block_index_of(i), bj = pi.block_index_of(i + 1);
  for (int b = 0; b < pi.block_count(); ++b) {
    if (b != bi && b != bj) {
      blocks.push_back(pi.blocks()[b]);
      continue;
    }
    for (int e : pi.blocks()[b])
      if (e != i && e != i + 1) merged.push_back(e);
  }
  blocks.push_back({i, i + 1});
  blocks.push_back(std::move(merged));
  return {1, SetPartition(pi.n(), std::move(blocks))};
}

NCVector tl_sn_act(int i, const NCVector& v) {
  NCVector out = v;
  for (const auto& [pi, c] : v.terms()) {
    ScaledPartition img = tl_act(i, pi);
    if (img.scalar != 0) out.add_term(img.partition, c * img.scalar);
  }
  return out;
}

IntMatrix tl_generator_matrix(int i, int n, int k) {
  const Space& sp = Space::get(n, k, 0);
  IntMatrix m(sp.dim(), sp.dim());
  for (int j = 0; j < sp.dim(); ++j) {
    ScaledPartition img = tl_act(i, sp.basis()[j]);
    if (img.scalar != 0) m.at(sp.index_of(img.partition), j) += img.scalar;
  }
  return m;
}

IntMatrix tl_matrix_of(const Permutation& w, int n, int k) {
  const Space& sp = Space::get(n, k, 0);
  IntMatrix m = IntMatrix::identity(sp.dim());
  for (int letter : reduced_word(w))
    m = m * (IntMatrix::identity(sp.dim()) + tl_generator_matrix(letter, n, k));
  return m;
}

TlCompareReport compare_modules(int n, int k) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("requires 1 <= k and 2k <= n");
  const Space& sp = Space::get(n, k, 0);
  TlCompareReport rep;
  rep.n = n;
  rep.k = k;
  rep.characters_equal = true;
  for (const auto& mu : partitions_of(n)) {
    Permutation w = class_representative(mu);
    Int skein_tr = sp.trace_of(w);
    Int tl_tr = tl_matrix_of(w, n, k).trace();
    rep.rows.push_back({mu, skein_tr, tl_tr});
    rep.characters_equal = rep.characters_equal && skein_tr == tl_tr;
  }

  rep.generator_matrices_equal = true;
  for (int i = 1; i <= n - 1; ++i) {
    IntMatrix skein_gen = sp.matrix_of_word({i});
    IntMatrix tl_gen = IntMatrix::identity(sp.dim()) + tl_generator_matrix(i, n, k);
    if (!(skein_gen == tl_gen)) rep.generator_matrices_equal = false;
  }

  // Span of basis elements with at least one doubleton block.
  rep.doubleton_span_is_submodule = true;
  int span_dim = 0;
  for (int j = 0; j < sp.dim(); ++j) {
    const SetPartition& pi = sp.basis()[j];
    if (pi.doubleton_count() < 1) continue;
    ++span_dim;
    for (int i = 1; i <= n - 1; ++i) {
      NCVector img = tl_sn_act(i, NCVector(pi));
      for (const auto& [term, c] : img.terms())
        if (term.doubleton_count() < 1) rep.doubleton_span_is_submodule = false;
    }
  }
  rep.doubleton_span_proper = span_dim > 0 && span_dim < sp.dim();

  rep.two_row_constituents_only = true;
  Int order = factorial(n);
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.rows() < 3) continue;
    Int inner = 0;
    for (const auto& row : rep.rows) inner += class_size(row.cls) * row.tl_trace * mn_character(lambda, row.cls);
    if (inner % order != 0) throw std::logic_error("character inner product not integral");
    if (inner != 0) rep.two_row_constituents_only = false;
  }
  return rep;
}

FiltrationReport doubleton_filtration_check(int n, int k) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("requires 1 <= k and 2k <= n");
  const Space& sp = Space::get(n, k, 0);
  FiltrationReport rep;
  rep.n = n;
  rep.k = k;
  rep.pass = true;
  for (int d = 0; d <= n / 2; ++d) {
    int dim = 0;
    bool closed = true;
    for (int j = 0; j < sp.dim(); ++j) {
      const SetPartition& pi = sp.basis()[j];
      if (pi.doubleton_count() < d) continue;
      ++dim;
      for (int i = 1; i <= n - 1; ++i) {
        NCVector img = tl_sn_act(i, NCVector(pi));
        for (const auto& [term, c] : img.terms())
          if (term.doubleton_count() < d) closed = false;
      }
    }
    rep.rows.push_back({d, dim, closed});
    rep.pass = rep.pass && closed;
  }
  return rep;
}

}  // namespace skein
