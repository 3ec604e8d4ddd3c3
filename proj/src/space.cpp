#include "skein/space.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "skein/enumerate.hpp"

namespace skein {

Space::Space(int n, std::optional<int> k, std::optional<int> s) : n_(n), k_(k), s_(s) {
  basis_ = noncrossing_partitions(n, k, s);
  if (basis_.empty()) throw std::invalid_argument("empty skein space");
  for (int j = 0; j < dim(); ++j) index_[basis_[j]] = j;
  gens_.resize(std::max(0, n - 1));
  for (int i = 1; i <= n_ - 1; ++i) {
    gens_[i - 1].resize(dim());
    for (int j = 0; j < dim(); ++j) {
      NCVector img = act_adjacent(i, basis_[j]);
      SparseVec sv;
      for (const auto& [pi, c] : img.terms()) {
        auto it = index_.find(pi);
        if (it == index_.end())
          throw std::logic_error("action left the space; grading violated");
        sv.emplace_back(it->second, c);
      }
      std::sort(sv.begin(), sv.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      gens_[i - 1][j] = std::move(sv);
    }
  }
}

int Space::index_of(const SetPartition& pi) const {
  auto it = index_.find(pi);
  if (it == index_.end()) throw std::invalid_argument("partition not in basis");
  return it->second;
}

const SparseVec& Space::generator_image(int i, int j) const {
  if (i < 1 || i > n_ - 1) throw std::out_of_range("generator index out of range");
  return gens_[i - 1][j];
}

SparseVec Space::apply_generator(int i, const SparseVec& v) const {
  if (i < 1 || i > n_ - 1) throw std::out_of_range("generator index out of range");
  // Scatter into a dense scratch of touched slots, then collect sorted.
  static thread_local std::vector<Int> scratch;
  static thread_local std::vector<int> touched;
  if (static_cast<int>(scratch.size()) < dim()) scratch.assign(dim(), Int(0));
  touched.clear();
  for (const auto& [j, c] : v) {
    for (const auto& [t, g] : gens_[i - 1][j]) {
      if (scratch[t] == 0 && g != 0) touched.push_back(t);
      scratch[t] += c * g;
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseVec out;
  out.reserve(touched.size());
  for (int t : touched) {
    if (scratch[t] != 0) out.emplace_back(t, scratch[t]);
    scratch[t] = 0;
  }
  return out;
}

SparseVec Space::apply_word(const Word& word, const SparseVec& v) const {
  SparseVec cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_generator(*it, cur);
  return cur;
}

SparseVec Space::apply_perm(const Permutation& w, const SparseVec& v) const {
  if (w.n() != n_) throw std::invalid_argument("size mismatch");
  return apply_word(reduced_word(w), v);
}

SparseVec Space::to_sparse(const NCVector& v) const {
  SparseVec out;
  for (const auto& [pi, c] : v.terms()) out.emplace_back(index_of(pi), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

NCVector Space::to_vector(const SparseVec& v) const {
  NCVector out(n_);
  for (const auto& [j, c] : v) out.add_term(basis_[j], c);
  return out;
}

IntMatrix Space::matrix_of_word(const Word& word) const {
  IntMatrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    SparseVec col = apply_word(word, {{j, Int(1)}});
    for (const auto& [r, c] : col) m.at(r, j) = c;
  }
  return m;
}

IntMatrix Space::matrix_of(const Permutation& w) const {
  if (w.n() != n_) throw std::invalid_argument("size mismatch");
  return matrix_of_word(reduced_word(w));
}

Int Space::trace_of(const Permutation& w) const {
  if (w.n() != n_) throw std::invalid_argument("size mismatch");
  Word word = reduced_word(w);
  Int t = 0;
  for (int j = 0; j < dim(); ++j) {
    SparseVec col = apply_word(word, {{j, Int(1)}});
    for (const auto& [r, c] : col)
      if (r == j) t += c;
  }
  return t;
}

SparseVec Space::apply_interval_sum(int lo, int hi, int sign, const SparseVec& v) const {
  // Left-coset decomposition of S_[lo,hi] over S_[lo,hi-1]: representatives
  // e, s_{hi-1}, s_{hi-2} s_{hi-1}, ..., s_lo ... s_{hi-1}. The subgroup sum
  // is applied first, then the (signed) representative chains; cost is
  // quadratic in the interval length instead of factorial.
  if (lo >= hi) return v;
  SparseVec inner = apply_interval_sum(lo, hi - 1, sign, v);
  SparseVec acc = inner;
  SparseVec chain = inner;
  int rep_sign = 1;
  for (int j = hi - 1; j >= lo; --j) {
    chain = apply_generator(j, chain);
    rep_sign *= sign;
    for (const auto& [idx, c] : chain) acc.emplace_back(idx, rep_sign > 0 ? c : -c);
  }
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec merged;
  for (const auto& [idx, c] : acc) {
    if (!merged.empty() && merged.back().first == idx)
      merged.back().second += c;
    else
      merged.emplace_back(idx, c);
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  return merged;
}

SparseVec Space::apply_symmetrizer(const IntPartition& lambda, int sign, const SparseVec& v) const {
  if (lambda.size() > n_) throw std::invalid_argument("shape larger than the ground set");
  SparseVec cur = v;
  int start = 1;
  for (int part : lambda.parts()) {
    cur = apply_interval_sum(start, start + part - 1, sign, cur);
    start += part;
  }
  return cur;
}

const Space& Space::get(int n, std::optional<int> k, std::optional<int> s) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Space>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, k.value_or(-1), s.value_or(-1));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Space>(n, k, s)).first;
  return *it->second;
}

}  // namespace skein
