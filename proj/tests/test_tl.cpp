#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skein/enumerate.hpp"
#include "skein/tl.hpp"

using namespace skein;

namespace {
SetPartition P(const std::string& s) { return SetPartition::parse(s); }
}  // namespace

TEST_CASE("diagram generator on basis elements") {
  CHECK(tl_act(1, P("1,2/3,4")) == ScaledPartition{-2, P("1,2/3,4")});
  CHECK(tl_act(2, P("1,2/3,4")) == ScaledPartition{1, P("2,3/1,4")});
  CHECK(tl_act(1, P("1,2,3")).scalar == 0);  // pinch inside a bigger block
  CHECK_THROWS_AS(tl_act(1, P("1/2,3")), std::invalid_argument);
  CHECK_THROWS_AS(tl_act(4, P("1,2,3,4")), std::out_of_range);
  // t_i^2 = -2 t_i termwise
  for (int n = 2; n <= 7; ++n)
    for (const auto& pi : noncrossing_partitions(n)) {
      if (pi.singleton_count() > 0) continue;
      for (int i = 1; i < n; ++i) {
        ScaledPartition once = tl_act(i, pi);
        if (once.scalar == 0) continue;
        ScaledPartition twice = tl_act(i, once.partition);
        CHECK(twice.scalar * once.scalar == -2 * once.scalar);
        CHECK(twice.partition == once.partition);
        CHECK(once.partition.is_noncrossing());
        CHECK(once.partition.singleton_count() == 0);
        CHECK(once.partition.block_count() == pi.block_count());
      }
    }
}

TEST_CASE("diagram relations as operator identities, n <= 8") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const Space& sp = Space::get(n, k, 0);
      std::vector<IntMatrix> t;
      for (int i = 1; i < n; ++i) t.push_back(tl_generator_matrix(i, n, k));
      for (int i = 0; i < n - 1; ++i) {
        IntMatrix sq = t[i] * t[i];
        IntMatrix minus2(sp.dim(), sp.dim());
        for (int r = 0; r < sp.dim(); ++r)
          for (int c = 0; c < sp.dim(); ++c) minus2.at(r, c) = -2 * t[i].at(r, c);
        CHECK(sq == minus2);
        for (int j = i + 2; j < n - 1; ++j) CHECK(t[i] * t[j] == t[j] * t[i]);
        if (i + 1 < n - 1) {
          CHECK(t[i] * t[i + 1] * t[i] == t[i]);
          CHECK(t[i + 1] * t[i] * t[i + 1] == t[i + 1]);
        }
      }
    }
}

TEST_CASE("induced operators satisfy the Coxeter relations, n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const Space& sp = Space::get(n, k, 0);
      IntMatrix id = IntMatrix::identity(sp.dim());
      std::vector<IntMatrix> s;
      for (int i = 1; i < n; ++i) s.push_back(id + tl_generator_matrix(i, n, k));
      for (int i = 0; i < n - 1; ++i) {
        CHECK(s[i] * s[i] == id);
        for (int j = i + 2; j < n - 1; ++j) CHECK(s[i] * s[j] == s[j] * s[i]);
        if (i + 1 < n - 1)
          CHECK(s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1]);
      }
    }
}

TEST_CASE("alternating three-letter sum annihilates the diagram modules, n <= 6") {
  // e - s_i - s_{i+1} + s_i s_{i+1} + s_{i+1} s_i - s_i s_{i+1} s_i maps to
  // zero under s -> 1 + t.
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const Space& sp = Space::get(n, k, 0);
      IntMatrix id = IntMatrix::identity(sp.dim());
      for (int i = 1; i + 1 < n; ++i) {
        IntMatrix a = id + tl_generator_matrix(i, n, k);
        IntMatrix b = id + tl_generator_matrix(i + 1, n, k);
        IntMatrix total = id - a - b + a * b + b * a - a * b * a;
        CHECK(total.is_zero());
      }
    }
}

TEST_CASE("induced action never loses doubletons") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (const auto& pi : noncrossing_partitions(n, k, 0))
        for (int i = 1; i < n; ++i) {
          NCVector img = tl_sn_act(i, NCVector(pi));
          for (const auto& [term, c] : img.terms())
            CHECK(term.doubleton_count() >= pi.doubleton_count());
        }
}

TEST_CASE("matching modules coincide with the skein modules, k <= 4") {
  for (int k = 1; k <= 4; ++k) {
    auto rep = compare_modules(2 * k, k);
    CHECK(rep.generator_matrices_equal);
    CHECK(rep.characters_equal);
  }
}

TEST_CASE("the (6,2) diagram module differs and is reducible") {
  auto rep = compare_modules(6, 2);
  CHECK_FALSE(rep.characters_equal);
  CHECK(rep.doubleton_span_is_submodule);
  CHECK(rep.doubleton_span_proper);
  int differing = 0;
  for (const auto& row : rep.rows) differing += (row.skein_trace != row.tl_trace);
  CHECK(differing >= 1);
}

TEST_CASE("diagram modules only contain at most two-row constituents, 2k < n <= 7") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      auto rep = compare_modules(n, k);
      CHECK(rep.two_row_constituents_only);
      CHECK_FALSE(rep.characters_equal);  // flag shape has >= 3 rows when 2k < n
    }
}

TEST_CASE("doubleton filtration levels are closed, small sweep") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      auto rep = doubleton_filtration_check(n, k);
      CHECK(rep.pass);
      CHECK(rep.rows.front().min_doubletons == 0);
      CHECK(rep.rows.front().dim == Space::get(n, k, 0).dim());
    }
  // top level at n = 2k is the all-doubleton matching span
  auto rep = doubleton_filtration_check(8, 4);
  CHECK(rep.rows.back().dim > 0);
}
