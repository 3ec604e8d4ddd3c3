#include "skein/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

Permutation::Permutation(int n) : images_(n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (n() != v.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(n());
  for (int x = 1; x <= n(); ++x) img[x - 1] = of(v.of(x));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(n());
  for (int x = 1; x <= n(); ++x) img[of(x) - 1] = x;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (of(x) != x) return false;
  return true;
}

int Permutation::inversions() const {
  int inv = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if (of(i) > of(j)) ++inv;
  return inv;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(n() + 1, 0);
  std::vector<int> type;
  for (int x = 1; x <= n(); ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = of(y);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Permutation::to_one_line() const {
  std::string out;
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(of(i));
  }
  return out;
}

std::string Permutation::to_cycles() const {
  std::vector<char> seen(n() + 1, 0);
  std::string out;
  for (int x = 1; x <= n(); ++x) {
    if (seen[x] || of(x) == x) {
      seen[x] = 1;
      continue;
    }
    out += '(';
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out += ',';
      out += std::to_string(y);
      first = false;
      y = of(y);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation Permutation::parse(const std::string& text, int n) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw ParseError("value too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected number", i);
    return static_cast<int>(v);
  };
  skip_ws();
  if (i < text.size() && text[i] == '(') {
    // cycle notation
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    while (true) {
      skip_ws();
      if (i == text.size()) break;
      if (text[i] != '(') throw ParseError("expected '('", i);
      ++i;
      std::vector<int> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        cyc.push_back(read_int());
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
      }
      if (i == text.size()) throw ParseError("unterminated cycle", text.size());
      ++i;  // ')'
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        int a = cyc[j];
        if (a < 1 || a > n) throw ParseError("cycle element out of range", i);
        int b = cyc[(j + 1) % cyc.size()];
        img[a - 1] = b;
      }
    }
    try {
      return Permutation(std::move(img));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  if (text.compare(i, 2, "id") == 0 || text.compare(i, 1, "e") == 0) {
    return Permutation(n);
  }
  // one-line notation: n whitespace- or comma-separated images
  std::vector<int> img;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == ',') {
      ++i;
      continue;
    }
    img.push_back(read_int());
  }
  if (static_cast<int>(img.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " images", text.size());
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("transposition out of range");
  Permutation w(n);
  std::swap(w.images_[a - 1], w.images_[b - 1]);
  return w;
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = i % n + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::long_element(int n) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - i;
  return Permutation(std::move(img));
}

Permutation word_to_perm(const Word& word, int n) {
  Permutation w(n);
  for (int letter : word) w = w * Permutation::adjacent_transposition(n, letter);
  return w;
}

Word reduced_word(const Permutation& w) {
  // Right-multiplying by s_j swaps positions j, j+1 of the one-line
  // notation. Route the largest displaced value to its home position; each
  // swap removes exactly one inversion. The applied sequence, reversed,
  // multiplies out to w.
  std::vector<int> img = w.images();
  int n = w.n();
  Word applied;
  for (int v = n; v >= 1; --v) {
    int p = 0;
    for (int i = 1; i <= n; ++i)
      if (img[i - 1] == v) {
        p = i;
        break;
      }
    for (int j = p; j < v; ++j) {
      std::swap(img[j - 1], img[j]);
      applied.push_back(j);
    }
  }
  std::reverse(applied.begin(), applied.end());
  return applied;
}

Word reduced_word_lex(const Permutation& w) {
  // Peel letters off the left: while w != e, take the smallest descent of
  // w^{-1}... equivalently the smallest i with value i+1 before value i,
  // and prepend s_i.
  Permutation u = w;
  Word out;
  while (!u.is_identity()) {
    int pick = -1;
    for (int i = 1; i < u.n(); ++i) {
      // s_i * u has fewer inversions iff value i appears after value i+1.
      int pi = 0, pj = 0;
      for (int x = 1; x <= u.n(); ++x) {
        if (u.of(x) == i) pi = x;
        if (u.of(x) == i + 1) pj = x;
      }
      if (pj < pi) {
        pick = i;
        break;
      }
    }
    out.push_back(pick);
    u = Permutation::adjacent_transposition(u.n(), pick) * u;
  }
  return out;
}

SetPartition apply_perm(const Permutation& w, const SetPartition& pi) {
  if (w.n() != pi.n()) throw std::invalid_argument("permutation/partition size mismatch");
  auto bs = pi.blocks();
  for (auto& b : bs)
    for (int& e : b) e = w.of(e);
  return SetPartition(pi.n(), std::move(bs));
}

}  // namespace skein
