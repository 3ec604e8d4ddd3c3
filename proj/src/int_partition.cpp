#include "skein/int_partition.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("parts must be weakly decreasing");
  }
}

int IntPartition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntPartition IntPartition::conjugate() const {
  std::vector<int> conj;
  for (int c = 1; c <= (parts_.empty() ? 0 : parts_[0]); ++c) {
    int count = 0;
    for (int p : parts_) count += (p >= c);
    conj.push_back(count);
  }
  return IntPartition(std::move(conj));
}

long long IntPartition::b_statistic() const {
  long long b = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) b += static_cast<long long>(i) * parts_[i];
  return b;
}

int IntPartition::hook(int r, int c) const {
  int arm = parts_[r] - c - 1;
  int leg = 0;
  for (int i = r + 1; i < rows(); ++i) leg += (parts_[i] > c);
  return arm + leg + 1;
}

std::vector<int> IntPartition::hooks() const {
  std::vector<int> hs;
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < parts_[r]; ++c) hs.push_back(hook(r, c));
  return hs;
}

std::string IntPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

IntPartition IntPartition::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    long v = 0;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw ParseError("part too large", start);
      ++i;
    }
    parts.push_back(static_cast<int>(v));
  }
  try {
    return IntPartition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

bool dominance_leq(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("partition size mismatch");
  int rows = std::max(lambda.rows(), mu.rows());
  long long pl = 0, pm = 0;
  for (int i = 0; i < rows; ++i) {
    pl += lambda.part(i);
    pm += mu.part(i);
    if (pl > pm) return false;
  }
  return true;
}

Int hook_dim(const IntPartition& lambda) {
  Int num = factorial(lambda.size());
  Int den = 1;
  for (int h : lambda.hooks()) den *= h;
  if (num % den != 0) throw std::logic_error("hook length formula not integral");
  return num / den;
}

IntPartition flag_shape(int n, int k) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("flag shape requires 0 <= 2k <= n");
  std::vector<int> parts;
  if (k >= 1) {
    parts.push_back(k);
    parts.push_back(k);
  }
  for (int i = 0; i < n - 2 * k; ++i) parts.push_back(1);
  return IntPartition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.push_back(IntPartition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<IntPartition> partitions_of(int n) {
  std::vector<IntPartition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace skein
