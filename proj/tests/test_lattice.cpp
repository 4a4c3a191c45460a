#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "branchforge/common.hpp"
#include "branchforge/finite_field.hpp"
#include "branchforge/lattice_counter.hpp"
#include "branchforge/semigroup.hpp"

using namespace branchforge;

namespace {

std::string submodule_key(const StableSubmodule& m) {
  std::ostringstream os;
  for (const auto& row : m.basis) {
    for (auto e : row) os << static_cast<int>(e) << ",";
    os << ";";
  }
  return os.str();
}

std::set<std::string> key_set(const StableSubmoduleSet& set) {
  std::set<std::string> out;
  for (const auto& m : set.submodules) out.insert(submodule_key(m));
  return out;
}

}  // namespace

TEST_CASE("finite field axioms by brute force") {
  for (auto [p, k] : std::vector<std::pair<long, int>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    FiniteField F(p, k);
    long q = F.q();
    for (long a = 0; a < q; ++a) {
      auto A = static_cast<FiniteField::El>(a);
      CHECK(F.add(A, F.neg(A)) == 0);
      CHECK(F.mul(A, F.from_int(1)) == A);
      if (a != 0) CHECK(F.mul(A, F.inv(A)) == F.from_int(1));
      for (long b = 0; b < q; ++b) {
        auto B = static_cast<FiniteField::El>(b);
        CHECK(F.add(A, B) == F.add(B, A));
        CHECK(F.mul(A, B) == F.mul(B, A));
        for (long c = 0; c < q; ++c) {
          auto C = static_cast<FiniteField::El>(c);
          CHECK(F.mul(A, F.add(B, C)) == F.add(F.mul(A, B), F.mul(A, C)));
          CHECK(F.mul(F.mul(A, B), C) == F.mul(A, F.mul(B, C)));
        }
      }
    }
    // multiplicative group has the right exponent
    for (long a = 1; a < q; ++a) {
      FiniteField::El x = F.from_int(1);
      for (long i = 0; i < q - 1; ++i) x = F.mul(x, static_cast<FiniteField::El>(a));
      CHECK(x == F.from_int(1));
    }
  }
  CHECK_THROWS_AS(FiniteField(11, 2), Error);  // q = 121 > 64
}

TEST_CASE("truncated module shifts compose") {
  FiniteField F(3);
  BranchSemigroup s = semigroup_from_generators({4, 6, 13});
  TruncatedModule T = build_truncated_module(s, F);
  REQUIRE(T.c == 16);
  REQUIRE(T.multipliers.size() == 3);

  auto matmul = [&](const auto& A, const auto& B) {
    std::vector<std::vector<FiniteField::El>> C(
        T.c, std::vector<FiniteField::El>(T.c, 0));
    for (long i = 0; i < T.c; ++i)
      for (long k = 0; k < T.c; ++k)
        if (A[i][k])
          for (long j = 0; j < T.c; ++j)
            C[i][j] = F.add(C[i][j], F.mul(A[i][k], B[k][j]));
    return C;
  };
  auto shift_by = [&](long a) {
    std::vector<std::vector<FiniteField::El>> M(
        T.c, std::vector<FiniteField::El>(T.c, 0));
    for (long j = 0; j + a < T.c; ++j) M[j + a][j] = 1;
    return M;
  };

  // t^4 entries land where they should
  CHECK(T.multipliers[0] == shift_by(4));
  CHECK(T.multipliers[2] == shift_by(13));
  // t^4 * t^6 = t^10 in the truncation
  CHECK(matmul(T.multipliers[0], T.multipliers[1]) == shift_by(10));
  // shifts commute
  CHECK(matmul(T.multipliers[1], T.multipliers[0]) ==
        matmul(T.multipliers[0], T.multipliers[1]));
}

TEST_CASE("stable submodule counts on the frozen instances") {
  auto count = [](const std::vector<long>& gens, long p, int k = 1) {
    FiniteField F(p, k);
    return static_cast<long>(
        enumerate_stable_submodules(
            build_truncated_module(semigroup_from_generators(gens), F))
            .submodules.size());
  };
  CHECK(count({2, 3}, 2) == 3);
  CHECK(count({2, 3}, 3) == 4);
  CHECK(count({2, 3}, 5) == 6);
  CHECK(count({2, 3}, 2, 2) == 5);  // q = 4 through the extension field
  CHECK(count({2, 5}, 2) == 7);
  CHECK(count({2, 5}, 3) == 13);
  CHECK(count({3, 4}, 2) == 19);
  CHECK(count({3, 4}, 3) == 49);
}

TEST_CASE("BFS enumeration agrees with the all-subspace oracle") {
  const std::vector<std::pair<std::vector<long>, long>> cases = {
      {{2, 3}, 2}, {{2, 3}, 3}, {{2, 5}, 2}, {{3, 4}, 2}};
  for (const auto& [gens, p] : cases) {
    CAPTURE(gens);
    CAPTURE(p);
    FiniteField F(p);
    TruncatedModule T =
        build_truncated_module(semigroup_from_generators(gens), F);
    StableSubmoduleSet fast = enumerate_stable_submodules(T);
    StableSubmoduleSet naive = enumerate_stable_submodules_naive(T);
    CHECK(key_set(fast) == key_set(naive));
  }
}

TEST_CASE("every submodule has pivot 0 and a stable value set") {
  FiniteField F(2);
  BranchSemigroup s = semigroup_from_generators({3, 4});
  TruncatedModule T = build_truncated_module(s, F);
  for (const StableSubmodule& m : enumerate_stable_submodules(T).submodules) {
    REQUIRE_FALSE(m.value_set.empty());
    CHECK(m.value_set[0] == 0);
    CHECK(m.dimension == static_cast<int>(m.basis.size()));
    // value sets are Gamma-semimodules: stable under adding generators
    auto in_values = [&](long a) {
      if (a >= T.c) return true;
      return std::binary_search(m.value_set.begin(), m.value_set.end(), a);
    };
    for (long v : m.value_set)
      for (long g : s.generators) CHECK(in_values(v + g));
  }
}

TEST_CASE("semimodule enumeration") {
  auto added = [](const std::vector<long>& gens) {
    std::vector<std::vector<long>> out;
    for (const auto& m :
         enumerate_semimodules(semigroup_from_generators(gens)))
      out.push_back(m.added_gaps);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(added({2, 3}) == std::vector<std::vector<long>>{{}, {1}});
  CHECK(added({2, 5}) == std::vector<std::vector<long>>{{}, {1, 3}, {3}});
  CHECK(added({3, 4}) ==
        std::vector<std::vector<long>>{{}, {1, 2, 5}, {1, 5}, {2, 5}, {5}});
}

TEST_CASE("strata value sets are exactly the semimodules") {
  BranchSemigroup s = semigroup_from_generators({3, 4});
  std::set<std::vector<long>> semis;
  for (const auto& m : enumerate_semimodules(s)) semis.insert(m.added_gaps);

  for (long p : {2L, 3L}) {
    FiniteField F(p);
    TruncatedModule T = build_truncated_module(s, F);
    std::set<std::vector<long>> seen;
    for (const StableSubmodule& m :
         enumerate_stable_submodules(T).submodules) {
      std::vector<long> extra;
      for (long v : m.value_set)
        if (!s.contains(v)) extra.push_back(v);
      seen.insert(extra);
    }
    CHECK(seen == semis);
  }
}

TEST_CASE("count_points") {
  FiniteField F5(5), F3(3);
  CHECK(count_points(semigroup_from_generators({2, 3}), F5) == 6);
  CHECK(count_points(semigroup_from_generators({2, 5}), F3) == 13);
}

TEST_CASE("purity signature for the cusp") {
  BranchSemigroup s = semigroup_from_generators({2, 3});
  PuritySignature sig = purity_signature(s, {2, 3, 5});
  CHECK(sig.counts.at(2) == 3);
  CHECK(sig.counts.at(5) == 6);
  REQUIRE(sig.polynomial.size() == 2);
  CHECK(sig.polynomial[0] == Rational(1));
  CHECK(sig.polynomial[1] == Rational(1));
  CHECK(sig.semimodule_count == 2);
  CHECK(sig.pass());
  CHECK_FALSE(sig.flags.q2_deviation);
}

TEST_CASE("purity signature needs delta + 1 sample points") {
  BranchSemigroup s = semigroup_from_generators({3, 4});
  CHECK_THROWS_AS(purity_signature(s, {2, 3}), Error);  // delta = 3
}

TEST_CASE("budget enforcement") {
  Budget tight;
  tight.max_q = 3;
  CHECK_THROWS_AS(
      count_points(semigroup_from_generators({2, 3}), FiniteField(5), tight),
      Error);
  try {
    count_points(semigroup_from_generators({2, 3}), FiniteField(5), tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("threaded and serial purity runs agree") {
  BranchSemigroup s = semigroup_from_generators({3, 4});
  PuritySignature one = purity_signature(s, {2, 3, 5, 7}, {}, 1);
  PuritySignature four = purity_signature(s, {2, 3, 5, 7}, {}, 4);
  CHECK(one.counts == four.counts);
  CHECK(one.polynomial == four.polynomial);
  REQUIRE(one.strata.size() == four.strata.size());
  for (size_t i = 0; i < one.strata.size(); ++i) {
    CHECK(one.strata[i].added_gaps == four.strata[i].added_gaps);
    CHECK(one.strata[i].count_by_q == four.strata[i].count_by_q);
    CHECK(one.strata[i].exponent == four.strata[i].exponent);
  }
}
