#include "skein/nc_vector.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "skein/errors.hpp"

namespace skein {

NCVector::NCVector(const SetPartition& pi, Int coef) : n_(pi.n()) {
  add_term(pi, coef);
}

Int NCVector::coefficient(const SetPartition& pi) const {
  auto it = terms_.find(pi);
  return it == terms_.end() ? Int(0) : it->second;
}

void NCVector::add_term(const SetPartition& pi, const Int& coef) {
  if (coef == 0) return;
  if (n_ == 0 && terms_.empty()) n_ = pi.n();
  if (pi.n() != n_) throw std::invalid_argument("mixed ground-set sizes in vector");
  if (!pi.is_noncrossing()) throw std::invalid_argument("vector keys must be noncrossing");
  auto [it, inserted] = terms_.try_emplace(pi, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

NCVector& NCVector::operator+=(const NCVector& o) {
  for (const auto& [pi, c] : o.terms_) add_term(pi, c);
  return *this;
}

NCVector& NCVector::operator-=(const NCVector& o) {
  for (const auto& [pi, c] : o.terms_) add_term(pi, -c);
  return *this;
}

NCVector& NCVector::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [pi, coef] : terms_) coef *= c;
  return *this;
}

NCVector NCVector::operator+(const NCVector& o) const {
  NCVector r = *this;
  r += o;
  return r;
}

NCVector NCVector::operator-(const NCVector& o) const {
  NCVector r = *this;
  r -= o;
  return r;
}

NCVector NCVector::operator-() const {
  NCVector r = *this;
  r *= -1;
  return r;
}

std::string NCVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [pi, c] : terms_) {
    if (!first) out << '\n';
    first = false;
    if (c >= 0) out << '+';
    out << c.str() << " * " << pi.to_string();
  }
  return out.str();
}

NCVector NCVector::parse(const std::string& text) {
  NCVector v;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t base = offset;
    offset += line.size() + 1;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) continue;
    if (line.compare(i, 1, "0") == 0 && line.find_first_not_of(" \t0", i) == std::string::npos)
      continue;
    int sign = 1;
    if (line[i] == '+' || line[i] == '-') {
      if (line[i] == '-') sign = -1;
      ++i;
    }
    std::size_t num_start = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == num_start) throw ParseError("expected coefficient", base + i);
    Int coef(line.substr(num_start, i - num_start));
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] != '*') throw ParseError("expected '*'", base + i);
    ++i;
    SetPartition pi = SetPartition::parse(line.substr(i));
    v.add_term(pi, sign * coef);
  }
  return v;
}

std::string NCVector::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [pi, c] : terms_) {
    nlohmann::json term;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      term["coef"] = static_cast<long long>(c);
    else
      term["coef"] = c.str();
    term["blocks"] = pi.blocks();
    arr.push_back(term);
  }
  return arr.dump();
}

NCVector NCVector::parse_json(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  NCVector v;
  for (const auto& term : arr) {
    Int coef = term["coef"].is_string() ? Int(term["coef"].get<std::string>())
                                        : Int(term["coef"].get<long long>());
    auto blocks = term["blocks"].get<std::vector<std::vector<int>>>();
    int n = 0;
    for (const auto& b : blocks)
      for (int e : b) n = std::max(n, e);
    v.add_term(SetPartition(n, blocks), coef);
  }
  return v;
}

}  // namespace skein
