#include "skein/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

namespace {

// All set partitions via restricted growth strings.
void all_partitions_rec(int n, int pos, int max_label, std::vector<int>& label,
                        std::vector<SetPartition>& out) {
  if (pos > n) {
    std::vector<std::vector<int>> blocks(max_label + 1);
    for (int i = 1; i <= n; ++i) blocks[label[i]].push_back(i);
    out.emplace_back(n, std::move(blocks));
    return;
  }
  for (int c = 0; c <= max_label + 1; ++c) {
    label[pos] = c;
    all_partitions_rec(n, pos + 1, std::max(max_label, c), label, out);
  }
}

// Noncrossing partitions via the active-block stack: scanning 1..n, the
// blocks still able to take new elements are nested, so they form a stack.
// Element i either opens a new block or joins a block on the stack; joining
// at depth j permanently closes everything above j.
void noncrossing_rec(int n, int pos, std::vector<std::vector<int>>& stack,
                     std::vector<std::vector<int>>& closed, std::vector<SetPartition>& out) {
  if (pos > n) {
    std::vector<std::vector<int>> blocks = closed;
    blocks.insert(blocks.end(), stack.begin(), stack.end());
    out.emplace_back(n, std::move(blocks));
    return;
  }
  for (std::size_t j = 0; j < stack.size(); ++j) {
    std::vector<std::vector<int>> popped(stack.begin() + j + 1, stack.end());
    stack.resize(j + 1);
    stack[j].push_back(pos);
    closed.insert(closed.end(), popped.begin(), popped.end());
    noncrossing_rec(n, pos + 1, stack, closed, out);
    closed.resize(closed.size() - popped.size());
    stack[j].pop_back();
    stack.insert(stack.end(), popped.begin(), popped.end());
  }
  stack.push_back({pos});
  noncrossing_rec(n, pos + 1, stack, closed, out);
  stack.pop_back();
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int n, std::optional<int> k, std::optional<int> s,
                                               bool noncrossing_only) {
  if (n < 0) throw std::invalid_argument("negative ground-set size");
  std::vector<SetPartition> all;
  if (n == 0) {
    all.emplace_back(0, std::vector<std::vector<int>>{});
  } else if (noncrossing_only) {
    std::vector<std::vector<int>> stack, closed;
    noncrossing_rec(n, 1, stack, closed, all);
  } else {
    std::vector<int> label(n + 1, 0);
    all_partitions_rec(n, 2, 0, label, all);  // element 1 always has label 0
  }
  std::vector<SetPartition> out;
  for (auto& pi : all) {
    if (k && pi.block_count() != *k) continue;
    if (s && pi.singleton_count() != *s) continue;
    out.push_back(std::move(pi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace skein
