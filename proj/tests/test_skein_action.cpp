#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "skein/action.hpp"
#include "skein/enumerate.hpp"
#include "skein/space.hpp"

using namespace skein;

namespace {

SetPartition P(const std::string& s) { return SetPartition::parse(s); }

NCVector V(std::initializer_list<std::pair<const char*, int>> terms) {
  NCVector v;
  for (const auto& [s, c] : terms) v.add_term(P(s), c);
  return v;
}

}  // namespace

TEST_CASE("skein resolution: reference three-term expansion") {
  NCVector expected = V({{"1,2,6/3/4,5", 1}, {"1,2,4/3/5,6", 1}, {"1,2/3/4,5,6", -1}});
  CHECK(skein_resolve(P("1,2,5/3/4,6")) == expected);
  // computed from either repairing index
  CHECK(skein_resolve_at(P("1,2,5/3/4,6"), 4) == expected);
  CHECK(skein_resolve_at(P("1,2,5/3/4,6"), 5) == expected);
}

TEST_CASE("skein resolution: two-term doubleton case") {
  CHECK(skein_resolve(P("1,3/2,4")) == V({{"1,4/2,3", 1}, {"1,2/3,4", 1}}));
}

TEST_CASE("skein resolution is independent of the repairing index, n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& pi : enumerate_partitions(n)) {
      auto cls = classify(pi);
      if (cls.tag != CrossingClass::AlmostNoncrossing) continue;
      NCVector first = skein_resolve_at(pi, *cls.crossing_indices.begin());
      for (int i : cls.crossing_indices) CHECK(skein_resolve_at(pi, i) == first);
    }
}

TEST_CASE("skein resolution preserves block and singleton counts") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& pi : enumerate_partitions(n)) {
      if (classify(pi).tag != CrossingClass::AlmostNoncrossing) continue;
      NCVector r = skein_resolve(pi);
      for (const auto& [term, c] : r.terms()) {
        CHECK(term.block_count() == pi.block_count());
        CHECK(term.singleton_count() == pi.singleton_count());
        CHECK(term.is_noncrossing());
      }
    }
}

TEST_CASE("signed swap") {
  auto r1 = signed_swap(1, P("1/2"));
  CHECK(r1.sign == 1);
  CHECK(r1.partition == P("1/2"));
  auto r2 = signed_swap(1, P("1,3/2,4"));
  CHECK(r2.sign == -1);
  CHECK(r2.partition == P("1,4/2,3"));
  // involution with signs: applying twice returns (+1, pi)
  for (const auto& pi : enumerate_partitions(5))
    for (int i = 1; i < 5; ++i) {
      auto once = signed_swap(i, pi);
      auto twice = signed_swap(i, once.partition);
      CHECK(once.sign * twice.sign == 1);
      CHECK(twice.partition == pi);
    }
}

TEST_CASE("signed swaps satisfy the Coxeter relations over all partitions, n <= 7") {
  auto compose = [](int i, const SignedPartition& sp) {
    SignedPartition next = signed_swap(i, sp.partition);
    return SignedPartition{sp.sign * next.sign, next.partition};
  };
  for (int n = 2; n <= 7; ++n)
    for (const auto& pi : enumerate_partitions(n)) {
      SignedPartition id{1, pi};
      for (int i = 1; i < n; ++i) {
        CHECK(compose(i, compose(i, id)) == id);
        for (int j = i + 2; j < n; ++j)
          CHECK(compose(i, compose(j, id)) == compose(j, compose(i, id)));
      }
      for (int i = 1; i + 1 < n; ++i)
        CHECK(compose(i, compose(i + 1, compose(i, id))) ==
              compose(i + 1, compose(i, compose(i + 1, id))));
    }
}

TEST_CASE("star action") {
  SetPartition pi = P("1,2,3/4,5,6");
  auto id = star_act(Permutation(6), pi);
  CHECK(id.sign == 1);
  CHECK(id.partition == pi);
  auto rot = star_act(Permutation::long_cycle(6), pi);
  CHECK(rot.sign == -1);
  CHECK(rot.partition == P("2,3,4/1,5,6"));
  // partition component is always the plain permutation image
  for (const auto& w : oracle::symmetric_group(5))
    for (const auto& p : enumerate_partitions(5))
      CHECK(star_act(w, p).partition == apply_perm(w, p));
}

TEST_CASE("star action is independent of the reduced word") {
  for (const auto& w : oracle::symmetric_group(5)) {
    Word alt = reduced_word_lex(w);
    for (const auto& p : enumerate_partitions(5)) {
      SignedPartition via_default = star_act(w, p);
      SignedPartition cur{1, p};
      for (auto it = alt.rbegin(); it != alt.rend(); ++it) {
        SignedPartition next = signed_swap(*it, cur.partition);
        cur = {cur.sign * next.sign, next.partition};
      }
      CHECK(via_default == cur);
    }
  }
}

TEST_CASE("adjacent transposition action: the three cases") {
  CHECK(act_adjacent(1, P("1,2/3")) == V({{"1,2/3", -1}}));
  CHECK(act_adjacent(1, P("1/2,3")) == V({{"2/1,3", 1}}));
  CHECK(act_adjacent(4, P("1,2,4/3/5,6")) == skein_resolve(P("1,2,5/3/4,6")));
}

TEST_CASE("action grading: block and singleton counts preserved") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& pi : noncrossing_partitions(n))
      for (int i = 1; i < n; ++i) {
        NCVector img = act_adjacent(i, pi);
        for (const auto& [term, c] : img.terms()) {
          CHECK(term.block_count() == pi.block_count());
          CHECK(term.singleton_count() == pi.singleton_count());
        }
      }
}

TEST_CASE("act_word basics") {
  NCVector v = V({{"1,2/3,4", 2}, {"1,4/2,3", -3}});
  CHECK(act_word({}, v) == v);
  for (int i = 1; i <= 3; ++i) CHECK(act_word({i, i}, v) == v);
  CHECK(act_word({1, 2, 3, 4, 5}, NCVector(P("1,2,3/4,5,6"))) ==
        V({{"2,3,4/1,5,6", -1}}));
}

TEST_CASE("Coxeter relations for the module action, exhaustive n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const Space& sp = Space::get(n);
    for (int j = 0; j < sp.dim(); ++j) {
      SparseVec e{{j, Int(1)}};
      for (int i = 1; i < n; ++i) {
        CHECK(sp.apply_word({i, i}, e) == e);
        for (int l = i + 2; l < n; ++l)
          CHECK(sp.apply_word({i, l}, e) == sp.apply_word({l, i}, e));
      }
      for (int i = 1; i + 1 < n; ++i)
        CHECK(sp.apply_word({i, i + 1, i}, e) == sp.apply_word({i + 1, i, i + 1}, e));
    }
  }
}

TEST_CASE("space tables agree with the direct action") {
  for (int n = 2; n <= 6; ++n) {
    const Space& sp = Space::get(n);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> letter(1, n - 1);
    for (int j = 0; j < sp.dim(); ++j) {
      Word w;
      for (int t = 0; t < 6; ++t) w.push_back(letter(rng));
      NCVector direct = act_word(w, NCVector(sp.basis()[j]));
      CHECK(sp.to_vector(sp.apply_word(w, {{j, Int(1)}})) == direct);
    }
  }
}

TEST_CASE("act_perm is independent of the reduced word, exhaustive n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const Space& sp = Space::get(n);
    for (const auto& w : oracle::symmetric_group(n)) {
      Word a = reduced_word(w), b = reduced_word_lex(w);
      if (a == b) continue;
      for (int j = 0; j < sp.dim(); ++j) {
        SparseVec e{{j, Int(1)}};
        CHECK(sp.apply_word(a, e) == sp.apply_word(b, e));
      }
    }
  }
}

TEST_CASE("act_perm composes as a group action, randomized n = 7") {
  const Space& sp = Space::get(7);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, sp.dim() - 1);
  std::vector<int> img(7);
  for (int trial = 0; trial < 40; ++trial) {
    for (int i = 0; i < 7; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation u{img};
    std::shuffle(img.begin(), img.end(), rng);
    Permutation v{img};
    SparseVec e{{pick(rng), Int(1)}};
    CHECK(sp.apply_perm(u * v, e) == sp.apply_perm(u, sp.apply_perm(v, e)));
  }
}

TEST_CASE("rotation acts as the long cycle up to sign, exhaustive n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    Permutation c = Permutation::long_cycle(n);
    int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
    for (const auto& pi : noncrossing_partitions(n)) {
      if (pi.singleton_count() > 0) continue;
      CHECK(act_perm(c, pi) == NCVector(pi.rotated(), sign));
    }
  }
}

TEST_CASE("rotation on the two distinguished elements") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      Permutation c = Permutation::long_cycle(n);
      int sign = (n % 2 == 0) ? -1 : 1;
      SetPartition p0 = nested_pairs_element(n, k);
      SetPartition p1 = adjacent_pairs_element(n, k);
      CHECK(act_perm(c, p0) == NCVector(p0.rotated(), sign));
      CHECK(act_perm(c, p1) == NCVector(p1.rotated(), sign));
    }
}

TEST_CASE("reflection acts as the long element up to sign, exhaustive n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    Permutation w0 = Permutation::long_element(n);
    int sign = (n / 2) % 2 == 0 ? 1 : -1;  // (-1)^floor(n/2)
    for (const auto& pi : noncrossing_partitions(n)) {
      if (pi.singleton_count() > 0) continue;
      CHECK(act_perm(w0, pi) == NCVector(pi.reflected(), sign));
    }
  }
}

TEST_CASE("wraparound transposition three-case formula, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    Permutation sn = Permutation::transposition(n, 1, n);
    for (const auto& pi : noncrossing_partitions(n)) {
      if (pi.singleton_count() > 0) continue;
      NCVector actual = act_perm(sn, pi);
      NCVector expected;
      if (pi.same_block(1, n)) {
        expected = NCVector(pi, -1);
      } else if (apply_perm(sn, pi).is_noncrossing()) {
        expected = NCVector(apply_perm(sn, pi), 1);
      } else {
        // resolve the wrapped crossing after rotating it to position 1
        NCVector res = skein_resolve_at(apply_perm(sn, pi).rotated(), 1);
        for (const auto& [term, c] : res.terms()) {
          SetPartition back = term;
          for (int t = 0; t < n - 1; ++t) back = back.rotated();
          expected.add_term(back, c);
        }
      }
      CHECK(actual == expected);
    }
  }
}

TEST_CASE("local symmetry: conjugations landing in the basis act by sign, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : oracle::symmetric_group(n))
      for (const auto& pi : noncrossing_partitions(n)) {
        SetPartition img = apply_perm(w, pi);
        if (!img.is_noncrossing()) continue;
        SignedPartition star = star_act(w, pi);
        CHECK(act_perm(w, pi) == NCVector(star.partition, star.sign));
      }
}

TEST_CASE("local property: interval unions restrict to the small module") {
  std::mt19937 rng(23);
  for (int n = 4; n <= 8; ++n) {
    auto basis = noncrossing_partitions(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
    int done = 0;
    for (int attempt = 0; attempt < 400 && done < 25; ++attempt) {
      const SetPartition& pi = basis[pick(rng)];
      // find a proper interval [lo, hi] that is a union of blocks
      int lo = -1, hi = -1;
      for (int a = 1; a <= n && lo < 0; ++a)
        for (int b = a; b <= n && lo < 0; ++b) {
          if (b - a + 1 >= n || b - a < 1) continue;
          bool uni = true;
          for (const auto& blk : pi.blocks()) {
            bool inside = blk.front() >= a && blk.back() <= b;
            bool outside = blk.back() < a || blk.front() > b;
            if (!inside && !outside) uni = false;
          }
          if (uni) {
            lo = a;
            hi = b;
          }
        }
      if (lo < 0) continue;
      ++done;
      int m = hi - lo + 1;
      // random permutation supported on [lo, hi]
      std::vector<int> small(m);
      for (int i = 0; i < m; ++i) small[i] = i + 1;
      std::shuffle(small.begin(), small.end(), rng);
      std::vector<int> img(n);
      for (int i = 1; i <= n; ++i) img[i - 1] = i;
      for (int i = 0; i < m; ++i) img[lo + i - 1] = lo + small[i] - 1;
      Permutation w{img};

      // restriction of pi to the interval, decremented
      std::vector<std::vector<int>> inner;
      std::vector<std::vector<int>> outer;
      for (const auto& blk : pi.blocks()) {
        if (blk.front() >= lo && blk.back() <= hi) {
          std::vector<int> shifted;
          for (int e : blk) shifted.push_back(e - lo + 1);
          inner.push_back(shifted);
        } else {
          outer.push_back(blk);
        }
      }
      NCVector small_img = act_perm(Permutation{small}, SetPartition(m, inner));
      NCVector expected;
      for (const auto& [term, c] : small_img.terms()) {
        std::vector<std::vector<int>> blocks = outer;
        for (const auto& blk : term.blocks()) {
          std::vector<int> shifted;
          for (int e : blk) shifted.push_back(e + lo - 1);
          blocks.push_back(shifted);
        }
        expected.add_term(SetPartition(n, blocks), c);
      }
      CHECK(act_perm(w, pi) == expected);
    }
    CHECK(done > 0);
  }
}

TEST_CASE("full four-term variant") {
  CHECK(act_adjacent_full(1, P("1,2/3")) == V({{"1,2/3", -1}}));
  // resolution of the doubleton crossing keeps all four terms
  CHECK(skein_resolve_full_at(P("1,3/2,4"), 1) ==
        V({{"1,4/2,3", 1}, {"1,2/3,4", 1}, {"1,2,3/4", -1}, {"1,2,4/3", -1}}));
  // terms never lose singletons, block count is preserved
  for (int n = 2; n <= 6; ++n)
    for (const auto& pi : noncrossing_partitions(n))
      for (int i = 1; i < n; ++i) {
        NCVector img = act_adjacent_full(i, pi);
        for (const auto& [term, c] : img.terms()) {
          CHECK(term.block_count() == pi.block_count());
          CHECK(term.singleton_count() >= pi.singleton_count());
        }
      }
}

TEST_CASE("full variant induces the graded action on singleton strata, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (int s = 0; s <= k; ++s) {
        auto basis = noncrossing_partitions(n, k, s);
        if (basis.empty()) continue;
        for (const auto& pi : basis)
          for (int i = 1; i < n; ++i) {
            NCVector quotient;
            NCVector full_img = act_adjacent_full(i, pi);
            for (const auto& [term, c] : full_img.terms()) {
              CHECK(term.singleton_count() >= s);
              if (term.singleton_count() == s) quotient.add_term(term, c);
            }
            CHECK(quotient == act_adjacent(i, pi));
          }
      }
}

TEST_CASE("vector text and json round trips") {
  NCVector v = V({{"1,2,6/3/4,5", 1}, {"1,2,4/3/5,6", 7}, {"1,2/3/4,5,6", -3}});
  CHECK(NCVector::parse(v.to_string()) == v);
  CHECK(NCVector::parse_json(v.to_json()) == v);
  CHECK(NCVector::parse("0").is_zero());
  NCVector big(P("1,2/3,4"), Int("123456789012345678901234567890"));
  CHECK(NCVector::parse(big.to_string()) == big);
  CHECK(NCVector::parse_json(big.to_json()) == big);
  CHECK_THROWS(NCVector::parse("2 ~ 1,2"));
  CHECK_THROWS(NCVector::parse("+1 * 1,3/2,4"));  // crossing key rejected
}
