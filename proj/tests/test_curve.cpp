#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "branchforge/common.hpp"
#include "branchforge/monomial_curve.hpp"
#include "branchforge/polynomial.hpp"
#include "branchforge/semigroup.hpp"
#include "test_corpus.hpp"

using namespace branchforge;

TEST_CASE("curve_equations structure on known instances") {
  BranchSemigroup s = semigroup_from_generators({2, 3});
  auto eqs = curve_equations(s);
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].weight == 6);
  CHECK(term_to_string(eqs[0].lead) == "u1^2");
  CHECK(term_to_string(eqs[0].tail) == "-u0^3");

  s = semigroup_from_generators({4, 6, 13});
  eqs = curve_equations(s);
  REQUIRE(eqs.size() == 2);
  CHECK(eqs[0].weight == 12);
  CHECK(term_to_string(eqs[0].lead) == "u1^2");
  CHECK(term_to_string(eqs[0].tail) == "-u0^3");
  CHECK(eqs[1].weight == 26);
  CHECK(term_to_string(eqs[1].lead) == "u2^2");
  CHECK(eqs[1].tail.exps.at("u0") == 2);
  CHECK(eqs[1].tail.exps.at("u1") == 3);
}

TEST_CASE("equations are weighted homogeneous") {
  for (const auto& gens : test_corpus::valid_semigroups()) {
    BranchSemigroup s = semigroup_from_generators(gens);
    WeightTable w;
    for (int i = 0; i <= s.genus(); ++i)
      w["u" + std::to_string(i)] = s.generators[i];
    for (const BinomialEquation& eq : curve_equations(s)) {
      CHECK(term_weight(eq.lead, w) == eq.weight);
      CHECK(term_weight(eq.tail, w) == eq.weight);
    }
  }
}

TEST_CASE("check_parametrization detects tampering") {
  BranchSemigroup s = semigroup_from_generators({3, 4});
  auto eqs = curve_equations(s);
  CHECK(check_parametrization(eqs, s));

  auto bad = eqs;
  bad[0].tail.exps["u0"] += 1;
  CHECK_FALSE(check_parametrization(bad, s));
}

TEST_CASE("compactify grading and dehomogenization round-trip") {
  BranchSemigroup s = semigroup_from_generators({4, 6, 13});
  auto eqs = curve_equations(s);
  WeightedProjectiveModel model = compactify(eqs, s);

  CHECK(model.vars == std::vector<std::string>{"X0", "X1", "X2", "Z"});
  CHECK(model.degrees.at("X0") == 4);
  CHECK(model.degrees.at("X2") == 13);
  CHECK(model.degrees.at("Z") == 1);
  CHECK(model.target_degrees == std::vector<long>{12, 26});
  CHECK(model.negative_z_terms.empty());

  // each F_i is homogeneous of the target degree
  for (size_t i = 0; i < model.equations.size(); ++i)
    for (const Term& t : model.equations[i])
      CHECK(term_weight(t, model.degrees) == model.target_degrees[i]);

  // setting Z = 1 and renaming back recovers the affine binomials
  std::map<std::string, Polynomial> back;
  back["Z"] = {{Rational(1), {}}};
  for (int i = 0; i <= s.genus(); ++i)
    back["X" + std::to_string(i)] = {
        {Rational(1), {{"u" + std::to_string(i), 1}}}};
  for (size_t i = 0; i < model.equations.size(); ++i) {
    Polynomial diff = substitute(model.equations[i], back);
    for (const Term& t : eqs[i].as_polynomial()) {
      Term neg = t;
      neg.coeff = -neg.coeff;
      diff.push_back(neg);
    }
    CHECK(is_zero(normalize(diff)));
  }
}

TEST_CASE("infinity chart is a single smooth point") {
  for (const auto& gens : test_corpus::valid_semigroups()) {
    CAPTURE(gens);
    BranchSemigroup s = semigroup_from_generators(gens);
    WeightedProjectiveModel model = compactify(curve_equations(s), s);
    InfinityChart chart = infinity_chart(model);
    REQUIRE(chart.point.size() == static_cast<size_t>(s.genus()) + 2);
    for (int i = 0; i <= s.genus(); ++i) CHECK(chart.point[i] == "1");
    CHECK(chart.point.back() == "0");
    CHECK(chart.smooth);
  }
}

TEST_CASE("normalization_check") {
  BranchSemigroup s = semigroup_from_generators({2, 5});
  WeightedProjectiveModel model = compactify(curve_equations(s), s);
  CHECK(normalization_check(model, s, 40));

  model.equations[0][0].exps["X1"] += 1;
  model.target_degrees[0] += 5;
  CHECK_FALSE(normalization_check(model, s, 40));
}

TEST_CASE("parametrization holds across the corpus") {
  for (const auto& gens : test_corpus::valid_semigroups()) {
    CAPTURE(gens);
    BranchSemigroup s = semigroup_from_generators(gens);
    auto eqs = curve_equations(s);
    CHECK(eqs.size() == static_cast<size_t>(s.genus()));
    CHECK(check_parametrization(eqs, s));
    WeightedProjectiveModel model = compactify(eqs, s);
    CHECK(normalization_check(model, s, 3 * s.conductor + 8));
  }
}
