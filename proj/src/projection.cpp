#include "skein/projection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skein {

std::pair<Permutation, IntPartition> conjugator_to_canonical(const SetPartition& pi) {
  std::vector<int> order(pi.block_count());
  std::iota(order.begin(), order.end(), 0);
  const auto& blocks = pi.blocks();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (blocks[a].size() != blocks[b].size()) return blocks[a].size() > blocks[b].size();
    return blocks[a].front() < blocks[b].front();
  });
  std::vector<int> lambda;
  std::vector<int> img(pi.n());
  int next = 1;
  for (int bi : order) {
    lambda.push_back(static_cast<int>(blocks[bi].size()));
    for (int e : blocks[bi]) img[e - 1] = next++;
  }
  return {Permutation(std::move(img)), IntPartition(std::move(lambda))};
}

NCVector project(const SetPartition& pi) {
  auto [w, lambda] = conjugator_to_canonical(pi);
  SignedPartition canon = star_act(w, pi);
  NCVector v(canon.partition, canon.sign);
  return act_perm(w.inverse(), v);
}

NCVector project_via(const SetPartition& pi, const Permutation& w) {
  if (!apply_perm(w, pi).is_noncrossing())
    throw std::invalid_argument("conjugated partition is not noncrossing");
  SignedPartition img = star_act(w, pi);
  NCVector v(img.partition, img.sign);
  return act_perm(w.inverse(), v);
}

std::vector<Permutation> stabilizer_generators(const IntPartition& lambda) {
  int n = lambda.size();
  std::vector<Permutation> gens;
  int start = 1;
  std::vector<std::pair<int, int>> intervals;  // [start, length]
  for (int part : lambda.parts()) {
    for (int i = start; i < start + part - 1; ++i)
      gens.push_back(Permutation::adjacent_transposition(n, i));
    intervals.emplace_back(start, part);
    start += part;
  }
  for (std::size_t j = 0; j + 1 < intervals.size(); ++j) {
    auto [a, d] = intervals[j];
    auto [b, d2] = intervals[j + 1];
    if (d != d2) continue;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int t = 0; t < d; ++t) {
      img[a + t - 1] = b + t;
      img[b + t - 1] = a + t;
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return gens;
}

}  // namespace skein
