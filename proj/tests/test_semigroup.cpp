#include <doctest.h>

#include <algorithm>
#include <vector>

#include "branchforge/common.hpp"
#include "branchforge/semigroup.hpp"
#include "test_corpus.hpp"

using namespace branchforge;

TEST_CASE("semigroup_from_generators on the hand-checked instances") {
  BranchSemigroup s = semigroup_from_generators({2, 3});
  CHECK(s.gaps == std::vector<long>{1});
  CHECK(s.delta == 1);
  CHECK(s.conductor == 2);

  s = semigroup_from_generators({3, 4});
  CHECK(s.gaps == std::vector<long>{1, 2, 5});
  CHECK(s.delta == 3);
  CHECK(s.conductor == 6);

  s = semigroup_from_generators({4, 6, 13});
  CHECK(s.gaps == std::vector<long>{1, 2, 3, 5, 7, 9, 11, 15});
  CHECK(s.delta == 8);
  CHECK(s.conductor == 16);
}

TEST_CASE("generator list is reduced to the minimal set") {
  BranchSemigroup s = semigroup_from_generators({2, 3, 4, 7});
  CHECK(s.generators == std::vector<long>{2, 3});
}

TEST_CASE("from_generators error paths") {
  CHECK_THROWS_AS(semigroup_from_generators({}), Error);
  CHECK_THROWS_AS(semigroup_from_generators({4, 6}), Error);
  try {
    semigroup_from_generators({4, 6});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCoprimeGenerators);
  }
}

TEST_CASE("semigroup_from_puiseux") {
  CHECK(semigroup_from_puiseux({2, {3}}).generators == std::vector<long>{2, 3});
  CHECK(semigroup_from_puiseux({3, {4}}).generators == std::vector<long>{3, 4});
  CHECK(semigroup_from_puiseux({4, {6, 7}}).generators ==
        std::vector<long>{4, 6, 13});

  CHECK_THROWS_AS(semigroup_from_puiseux({4, {7, 6}}), Error);  // not increasing
  CHECK_THROWS_AS(semigroup_from_puiseux({4, {8, 9}}), Error);  // 8 = 2*gcd
}

// Independent oracle for the Puiseux recursion: valuations achievable in
// k[[t^4, t^6 + t^7]], truncated at degree 32, found as pivot positions of the
// row-reduced span of all monomials in the two generators.
TEST_CASE("puiseux recursion vs truncated valuation enumeration") {
  constexpr int kBound = 32;
  using Series = std::vector<Rational>;  // coefficients of t^0..t^kBound
  auto mul = [](const Series& a, const Series& b) {
    Series out(kBound + 1, Rational(0));
    for (int i = 0; i <= kBound; ++i)
      for (int j = 0; i + j <= kBound; ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  Series one(kBound + 1, Rational(0)), x(kBound + 1, Rational(0)),
      y(kBound + 1, Rational(0));
  one[0] = 1;
  x[4] = 1;
  y[6] = 1;
  y[7] = 1;

  std::vector<Series> rows;
  for (int a = 0; 4 * a <= kBound; ++a)
    for (int b = 0; 4 * a + 6 * b <= kBound; ++b) {
      Series m = one;
      for (int i = 0; i < a; ++i) m = mul(m, x);
      for (int i = 0; i < b; ++i) m = mul(m, y);
      rows.push_back(m);
    }
  // row reduce, pivots by lowest exponent
  std::vector<long> pivots;
  for (int col = 0; col <= kBound; ++col) {
    size_t sel = rows.size();
    for (size_t r = 0; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        bool leading = true;
        for (int c2 = 0; c2 < col; ++c2)
          if (rows[r][c2] != 0) leading = false;
        if (leading) {
          sel = r;
          break;
        }
      }
    if (sel == rows.size()) continue;
    pivots.push_back(col);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == sel || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[sel][col];
      for (int c2 = 0; c2 <= kBound; ++c2) rows[r][c2] -= f * rows[sel][c2];
    }
  }

  BranchSemigroup s = semigroup_from_puiseux({4, {6, 7}});
  std::vector<long> expected;
  for (long a = 0; a <= kBound; ++a)
    if (s.contains(a)) expected.push_back(a);
  CHECK(pivots == expected);
}

TEST_CASE("gcd_ladder") {
  CHECK(gcd_ladder(semigroup_from_generators({2, 3})).e ==
        std::vector<long>{2, 1});
  CHECK(gcd_ladder(semigroup_from_generators({2, 3})).n ==
        std::vector<long>{2});
  GcdLadder ladder = gcd_ladder(semigroup_from_generators({4, 6, 13}));
  CHECK(ladder.e == std::vector<long>{4, 2, 1});
  CHECK(ladder.n == std::vector<long>{2, 2});
  CHECK(gcd_ladder(semigroup_from_generators({3, 4})).e ==
        std::vector<long>{3, 1});

  // non-minimal generator list forced by hand gives n_i = 1
  BranchSemigroup bogus;
  bogus.generators = {2, 3, 6};
  CHECK_THROWS_AS(gcd_ladder(bogus), Error);
}

TEST_CASE("represent with the greedy-from-top tie-break") {
  BranchSemigroup s = semigroup_from_generators({2, 3});
  CHECK(represent(s, 1).coeffs == std::vector<long>{3});

  s = semigroup_from_generators({4, 6, 13});
  // 26 = 2*4 + 3*6; the alternative (5,1) must lose the tie-break
  CHECK(represent(s, 2).coeffs == std::vector<long>{2, 3});

  s = semigroup_from_generators({3, 4});
  CHECK(represent(s, 1).coeffs == std::vector<long>{4});
}

TEST_CASE("contains") {
  BranchSemigroup s = semigroup_from_generators({3, 4});
  CHECK_FALSE(s.contains(5));
  CHECK(s.contains(6));
  CHECK(semigroup_from_generators({2, 3}).contains(0));
  CHECK_FALSE(s.contains(-1));
}

TEST_CASE("validate_plane_branch") {
  CHECK(validate_plane_branch(semigroup_from_generators({4, 6, 13})).all_pass());
  CHECK(validate_plane_branch(semigroup_from_generators({2, 3})).all_pass());
  CHECK(validate_plane_branch(semigroup_from_generators({4, 6, 15})).all_pass());

  // 12 = n_1*beta_1 > 11 fails strong increase
  ValidationReport report =
      validate_plane_branch(semigroup_from_generators({4, 6, 11}));
  CHECK_FALSE(report.all_pass());
  for (const ValidationCheck& c : report.checks)
    if (c.name == "strong_increase") CHECK_FALSE(c.pass);
}

TEST_CASE("corpus properties: closure, symmetry, ladder, representations") {
  for (const auto& gens : test_corpus::valid_semigroups()) {
    BranchSemigroup s = semigroup_from_generators(gens);
    CAPTURE(gens);
    REQUIRE(validate_plane_branch(s).all_pass());

    long c = s.conductor;
    CHECK(c == 2 * s.delta);
    for (long a = 0; a <= 3 * c; ++a)
      for (long b = a; b <= 3 * c; ++b)
        if (s.contains(a) && s.contains(b)) CHECK(s.contains(a + b));
    for (long a = 0; a < c; ++a)
      CHECK(s.contains(a) != s.contains(c - 1 - a));

    GcdLadder ladder = gcd_ladder(s);
    long prod = 1;
    for (long n : ladder.n) prod *= n;
    CHECK(prod == s.generators[0]);
    CHECK(ladder.e.back() == 1);

    for (int i = 1; i <= s.genus(); ++i) {
      SubRepresentation rep = represent(s, i);
      long total = 0;
      for (int j = 0; j < i; ++j) total += rep.coeffs[j] * s.generators[j];
      CHECK(total == ladder.n[i - 1] * s.generators[i]);
    }
  }
}

TEST_CASE("puiseux round-trip on the g <= 2 corpus") {
  for (const auto& p : test_corpus::puiseux_corpus()) {
    BranchSemigroup s = semigroup_from_puiseux(p);
    BranchSemigroup again = semigroup_from_generators(s.generators);
    CHECK(s.generators == again.generators);
    CHECK(s.gaps == again.gaps);
  }
}
