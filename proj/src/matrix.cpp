#include "skein/matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace skein {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Int& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Int IntMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Int t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::vector<std::string> cells(a_.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    cells[i] = a_[i].str();
    width = std::max(width, cells[i].size());
  }
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const std::string& s = cells[static_cast<std::size_t>(r) * cols_ + c];
      out << std::string(width - s.size() + (c ? 1 : 0), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string IntMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < cols_; ++c) {
      const Int& x = at(r, c);
      if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        row.push_back(static_cast<long long>(x));
      else
        row.push_back(x.str());
    }
    rows.push_back(row);
  }
  return rows.dump();
}

}  // namespace skein
