#pragma once

#include <string>
#include <vector>

#include "branchforge/polynomial.hpp"
#include "branchforge/semigroup.hpp"

namespace branchforge {

// f_i = u_i^{n_i} - u_0^{l_0} ... u_{i-1}^{l_{i-1}}, both sides of common
// weighted degree n_i * beta_i.
struct BinomialEquation {
  int index = 0;
  Term lead;
  Term tail;
  long weight = 0;

  Polynomial as_polynomial() const { return {lead, tail}; }
};

// The closure of the monomial curve inside Proj(k[X_0..X_g, Z]) with
// deg(X_i) = beta_i, deg(Z) = 1.
struct WeightedProjectiveModel {
  std::vector<std::string> vars;       // X0..Xg, Z
  WeightTable degrees;
  std::vector<Polynomial> equations;   // F_i
  std::vector<long> target_degrees;    // n_i * beta_i per equation
  // Equation/term pairs whose Z-exponent came out negative when a deformed
  // family was homogenized; empty for the plain binomial model.
  std::vector<std::pair<int, Term>> negative_z_terms;
};

struct InfinityChart {
  std::vector<std::string> point;                  // homogeneous coordinates
  bool smooth = false;
  std::vector<std::string> normalized_equations;   // after the chart reduction
};

std::vector<BinomialEquation> curve_equations(const BranchSemigroup& s);
bool check_parametrization(const std::vector<BinomialEquation>& eqs,
                           const BranchSemigroup& s);
WeightedProjectiveModel compactify(const std::vector<BinomialEquation>& eqs,
                                   const BranchSemigroup& s);
InfinityChart infinity_chart(const WeightedProjectiveModel& model);
bool normalization_check(const WeightedProjectiveModel& model,
                         const BranchSemigroup& s, long degree_bound);

}  // namespace branchforge
