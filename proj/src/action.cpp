#include "skein/action.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

namespace {

// Replaces the blocks through i and i+1 by the given pair, dropping empties.
SetPartition rebuild(const SetPartition& pi, int i, std::vector<int> first,
                     std::vector<int> second) {
  std::vector<std::vector<int>> blocks;
  int bi = pi.block_index_of(i), bj = pi.block_index_of(i + 1);
  for (int b = 0; b < pi.block_count(); ++b)
    if (b != bi && b != bj) blocks.push_back(pi.blocks()[b]);
  if (!first.empty()) blocks.push_back(std::move(first));
  if (!second.empty()) blocks.push_back(std::move(second));
  return SetPartition(pi.n(), std::move(blocks));
}

std::vector<int> without(const std::vector<int>& block, int e) {
  std::vector<int> r;
  for (int x : block)
    if (x != e) r.push_back(x);
  return r;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

NCVector resolve_at(const SetPartition& pi, int i, bool full) {
  if (!pi.swap_adjacent(i).is_noncrossing())
    throw std::invalid_argument("partition does not repair at the given index");
  // B_i = {i, a_1..a_k}, B_{i+1} = {i+1, b_1..b_l}; k, l >= 1.
  std::vector<int> as = without(pi.block_of(i), i);
  std::vector<int> bs = without(pi.block_of(i + 1), i + 1);
  if (as.empty() || bs.empty() || pi.same_block(i, i + 1))
    throw std::invalid_argument("no crossing between the blocks at the given index");
  NCVector out(pi.n());
  out.add_term(pi.swap_adjacent(i), 1);
  out.add_term(rebuild(pi, i, {i, i + 1}, concat(as, bs)), 1);
  if (full || bs.size() >= 2) out.add_term(rebuild(pi, i, concat({i, i + 1}, as), bs), -1);
  if (full || as.size() >= 2) out.add_term(rebuild(pi, i, concat({i, i + 1}, bs), as), -1);
  return out;
}

}  // namespace

NCVector skein_resolve_at(const SetPartition& pi, int i) { return resolve_at(pi, i, false); }

NCVector skein_resolve_full_at(const SetPartition& pi, int i) { return resolve_at(pi, i, true); }

NCVector skein_resolve(const SetPartition& pi) {
  CrossingClass cls = classify(pi);
  if (cls.tag != CrossingClass::AlmostNoncrossing)
    throw std::invalid_argument("skein_resolve requires an almost noncrossing partition");
  return skein_resolve_at(pi, *cls.crossing_indices.begin());
}

SignedPartition signed_swap(int i, const SetPartition& pi) {
  int sign = (pi.valence(i) == 0 || pi.valence(i + 1) == 0) ? 1 : -1;
  return {sign, pi.swap_adjacent(i)};
}

SignedPartition star_act(const Permutation& w, const SetPartition& pi) {
  if (w.n() != pi.n()) throw std::invalid_argument("permutation/partition size mismatch");
  Word word = reduced_word(w);
  SignedPartition cur{1, pi};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    SignedPartition next = signed_swap(*it, cur.partition);
    cur = {cur.sign * next.sign, next.partition};
  }
  return cur;
}

namespace {

NCVector act_adjacent_impl(int i, const SetPartition& pi, bool full) {
  if (i < 1 || i >= pi.n()) throw std::out_of_range("transposition index out of range");
  if (!pi.is_noncrossing()) throw std::invalid_argument("input must be noncrossing");
  if (pi.same_block(i, i + 1)) return NCVector(pi, -1);
  SetPartition swapped = pi.swap_adjacent(i);
  if (swapped.is_noncrossing()) return NCVector(swapped, 1);
  return resolve_at(swapped, i, full);
}

}  // namespace

NCVector act_adjacent(int i, const SetPartition& pi) { return act_adjacent_impl(i, pi, false); }

NCVector act_adjacent_full(int i, const SetPartition& pi) {
  return act_adjacent_impl(i, pi, true);
}

namespace {

template <typename Op>
NCVector act_linear(const NCVector& v, Op op) {
  NCVector out(v.n());
  for (const auto& [pi, c] : v.terms()) {
    NCVector img = op(pi);
    img *= c;
    out += img;
  }
  return out;
}

}  // namespace

NCVector act_adjacent(int i, const NCVector& v) {
  return act_linear(v, [i](const SetPartition& pi) { return act_adjacent(i, pi); });
}

NCVector act_adjacent_full(int i, const NCVector& v) {
  return act_linear(v, [i](const SetPartition& pi) { return act_adjacent_full(i, pi); });
}

NCVector act_word(const Word& word, const NCVector& v) {
  NCVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_adjacent(*it, cur);
  return cur;
}

NCVector act_word_full(const Word& word, const NCVector& v) {
  NCVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_adjacent_full(*it, cur);
  return cur;
}

NCVector act_perm(const Permutation& w, const NCVector& v) {
  if (w.n() != v.n() && !v.is_zero()) throw std::invalid_argument("size mismatch");
  return act_word(reduced_word(w), v);
}

NCVector act_perm(const Permutation& w, const SetPartition& pi) {
  return act_perm(w, NCVector(pi));
}

SetPartition nested_pairs_element(int n, int k) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("requires 1 <= k and 2k <= n");
  std::vector<std::vector<int>> blocks;
  std::vector<int> big{1};
  for (int e = 2 * k; e <= n; ++e) big.push_back(e);
  blocks.push_back(std::move(big));
  for (int j = 2; j <= k; ++j) blocks.push_back({j, 2 * k + 1 - j});
  return SetPartition(n, std::move(blocks));
}

SetPartition adjacent_pairs_element(int n, int k) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("requires 1 <= k and 2k <= n");
  std::vector<std::vector<int>> blocks;
  std::vector<int> big;
  for (int e = 1; e <= n - 2 * k + 2; ++e) big.push_back(e);
  blocks.push_back(std::move(big));
  for (int a = n - 2 * k + 3; a < n; a += 2) blocks.push_back({a, a + 1});
  return SetPartition(n, std::move(blocks));
}

}  // namespace skein
