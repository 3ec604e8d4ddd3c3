#include "skein/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw std::invalid_argument("ground-set size must be nonnegative");
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  block_idx_.assign(n_ + 1, -1);
  int seen = 0;
  for (int bi = 0; bi < static_cast<int>(blocks_.size()); ++bi) {
    for (int e : blocks_[bi]) {
      if (e < 1 || e > n_) throw std::invalid_argument("element out of range");
      if (block_idx_[e] != -1) throw std::invalid_argument("element repeated across blocks");
      block_idx_[e] = bi;
      ++seen;
    }
  }
  if (seen != n_) throw std::invalid_argument("blocks do not cover the ground set");
}

int SetPartition::singleton_count() const {
  int s = 0;
  for (const auto& b : blocks_) s += (b.size() == 1);
  return s;
}

int SetPartition::doubleton_count() const {
  int d = 0;
  for (const auto& b : blocks_) d += (b.size() == 2);
  return d;
}

int SetPartition::block_index_of(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("element out of range");
  return block_idx_[i];
}

const std::vector<int>& SetPartition::block_of(int i) const {
  return blocks_[block_index_of(i)];
}

int SetPartition::valence(int i) const {
  std::size_t sz = block_of(i).size();
  return sz == 1 ? 0 : (sz == 2 ? 1 : 2);
}

SetPartition SetPartition::swap_adjacent(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("swap index out of range");
  auto bs = blocks_;
  for (auto& b : bs)
    for (int& e : b) {
      if (e == i)
        e = i + 1;
      else if (e == i + 1)
        e = i;
    }
  return SetPartition(n_, std::move(bs));
}

SetPartition SetPartition::rotated() const {
  auto bs = blocks_;
  for (auto& b : bs)
    for (int& e : b) e = e % n_ + 1;
  return SetPartition(n_, std::move(bs));
}

SetPartition SetPartition::reflected() const {
  auto bs = blocks_;
  for (auto& b : bs)
    for (int& e : b) e = n_ + 1 - e;
  return SetPartition(n_, std::move(bs));
}

namespace {

// Two disjoint sorted blocks cross iff their merged label sequence has at
// least four maximal runs (pattern ABAB or BABA).
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t ia = 0, ib = 0;
  int runs = 0, last = 0;  // 1 = a, 2 = b
  while (ia < a.size() || ib < b.size()) {
    int label;
    if (ib == b.size() || (ia < a.size() && a[ia] < b[ib])) {
      label = 1;
      ++ia;
    } else {
      label = 2;
      ++ib;
    }
    if (label != last) {
      ++runs;
      last = label;
      if (runs >= 4) return true;
    }
  }
  return false;
}

}  // namespace

bool SetPartition::is_noncrossing() const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t j = i + 1; j < blocks_.size(); ++j)
      if (blocks_cross(blocks_[i], blocks_[j])) return false;
  return true;
}

CrossingClass classify(const SetPartition& pi) {
  if (pi.is_noncrossing()) return {CrossingClass::Noncrossing, {}};
  std::set<int> repairing;
  for (int i = 1; i < pi.n(); ++i)
    if (pi.swap_adjacent(i).is_noncrossing()) repairing.insert(i);
  if (repairing.empty()) return {CrossingClass::Crossing, {}};
  return {CrossingClass::AlmostNoncrossing, std::move(repairing)};
}

SetPartition interval_partition(const std::vector<int>& lengths) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int len : lengths) {
    if (len <= 0) throw std::invalid_argument("interval lengths must be positive");
    std::vector<int> b(len);
    for (int j = 0; j < len; ++j) b[j] = next + j;
    next += len;
    blocks.push_back(std::move(b));
  }
  return SetPartition(next - 1, std::move(blocks));
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    if (bi) out += '/';
    for (std::size_t j = 0; j < blocks_[bi].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[bi][j]);
    }
  }
  return out;
}

SetPartition SetPartition::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  std::size_t i = 0;
  bool expect_number = true;
  auto flush_block = [&](std::size_t pos) {
    if (cur.empty()) throw ParseError("empty block", pos);
    blocks.push_back(cur);
    cur.clear();
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!expect_number) throw ParseError("expected ',' or '/' before number", i);
      std::size_t j = i;
      long v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        v = v * 10 + (text[j] - '0');
        if (v > 1000000) throw ParseError("element too large", i);
        ++j;
      }
      if (v < 1) throw ParseError("elements are 1-based", i);
      cur.push_back(static_cast<int>(v));
      i = j;
      expect_number = false;
    } else if (c == ',') {
      if (expect_number) throw ParseError("expected number before ','", i);
      expect_number = true;
      ++i;
    } else if (c == '/') {
      if (expect_number) throw ParseError("expected number before '/'", i);
      flush_block(i);
      expect_number = true;
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (expect_number && !cur.empty()) throw ParseError("dangling separator", text.size());
  if (!cur.empty()) flush_block(text.size());
  if (blocks.empty()) throw ParseError("empty partition", 0);
  int n = 0;
  for (const auto& b : blocks)
    for (int e : b) n = std::max(n, e);
  int count = 0;
  for (const auto& b : blocks) count += static_cast<int>(b.size());
  if (count != n)
    throw ParseError("blocks must cover 1.." + std::to_string(n) + " exactly", 0);
  try {
    return SetPartition(n, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace skein
