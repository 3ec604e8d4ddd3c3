#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/qpoly.hpp"

namespace skein {

enum class CspFamily { Catalan, Narayana, Flag, Subsets };

CspFamily parse_family(const std::string& name);  // "catalan" | "narayana" | "flag" | "subsets"
std::string family_name(CspFamily f);

// Elements of the family over [n] fixed by d-fold rotation (cyclic shift
// for subsets), counted exhaustively.
long long count_fixed(CspFamily family, int n, std::optional<int> k, int d);

struct CspRow {
  int d;
  long long fixed;
  Int evaluation;
  bool ok;
};

struct CspReport {
  CspFamily family;
  int n;
  std::optional<int> k;
  QPoly polynomial;
  std::vector<CspRow> rows;  // d = 0..n-1
  bool pass;
};

// PASS iff fixed-point counts match root-of-unity evaluations of the
// family's sieving polynomial for every d in 0..n-1.
CspReport verify_csp(CspFamily family, int n, std::optional<int> k = std::nullopt, int jobs = 1);

struct SpringerRow {
  int order;  // order of the underlying cycle (n or n-1)
  int d;
  Int character_value;
  Int evaluation;
  bool ok;
};

struct SpringerReport {
  IntPartition lambda;
  std::vector<SpringerRow> rows;
  bool pass;
};

// chi^lambda at powers of an n-cycle (d | n) and of an (n-1)-cycle
// (d | n-1) against root-of-unity evaluations of the fake degree
// polynomial.
SpringerReport springer_check(const IntPartition& lambda);

// Exact polynomial identity
//   [m+n k] = sum_j q^(j(m-k+j)) [m k-j][n j].
bool chu_vandermonde_check(int m, int n, int k);

}  // namespace skein
