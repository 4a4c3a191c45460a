#include "branchforge/monomial_curve.hpp"

#include <algorithm>

namespace branchforge {

std::vector<BinomialEquation> curve_equations(const BranchSemigroup& s) {
  GcdLadder ladder = gcd_ladder(s);
  std::vector<BinomialEquation> eqs;
  for (int i = 1; i <= s.genus(); ++i) {
    SubRepresentation rep = represent(s, i);
    BinomialEquation eq;
    eq.index = i;
    eq.weight = ladder.n[i - 1] * s.generators[i];
    eq.lead.coeff = 1;
    eq.lead.exps["u" + std::to_string(i)] = ladder.n[i - 1];
    eq.tail.coeff = -1;
    for (int j = 0; j < i; ++j)
      if (rep.coeffs[j] != 0)
        eq.tail.exps["u" + std::to_string(j)] = rep.coeffs[j];
    eqs.push_back(eq);
  }
  return eqs;
}

bool check_parametrization(const std::vector<BinomialEquation>& eqs,
                           const BranchSemigroup& s) {
  std::map<std::string, Polynomial> param;
  for (int k = 0; k <= s.genus(); ++k)
    param["u" + std::to_string(k)] = {{Rational(1), {{"t", s.generators[k]}}}};
  for (const BinomialEquation& eq : eqs)
    if (!is_zero(substitute(eq.as_polynomial(), param))) return false;
  return true;
}

WeightedProjectiveModel compactify(const std::vector<BinomialEquation>& eqs,
                                   const BranchSemigroup& s) {
  WeightedProjectiveModel model;
  std::map<std::string, Polynomial> rename;
  for (int k = 0; k <= s.genus(); ++k) {
    std::string X = "X" + std::to_string(k);
    model.vars.push_back(X);
    model.degrees[X] = s.generators[k];
    rename["u" + std::to_string(k)] = {{Rational(1), {{X, 1}}}};
  }
  model.vars.push_back("Z");
  model.degrees["Z"] = 1;
  for (const BinomialEquation& eq : eqs) {
    model.equations.push_back(substitute(eq.as_polynomial(), rename));
    model.target_degrees.push_back(eq.weight);
  }
  return model;
}

InfinityChart infinity_chart(const WeightedProjectiveModel& model) {
  // Chart X_0 != 0, after quotient by the beta_0-th roots of unity the
  // equations reduce recursively to x_i = 1.
  std::map<std::string, Polynomial> sub;
  sub["X0"] = {{Rational(1), {}}};
  InfinityChart chart;
  for (size_t e = 0; e < model.equations.size(); ++e) {
    Polynomial reduced = substitute(model.equations[e], sub);
    std::string xi = "X" + std::to_string(e + 1);
    // expected shape: x_i^{n_i} - 1
    if (reduced.size() != 2)
      throw Error(ErrorCode::NormalizationFailed,
                  "chart equation does not reduce to a binomial");
    const Term* lead = nullptr;
    const Term* tail = nullptr;
    for (const Term& t : reduced) {
      if (t.exps.size() == 1 && t.exps.count(xi))
        lead = &t;
      else if (t.exps.empty())
        tail = &t;
    }
    if (!lead || !tail || lead->coeff != 1 || tail->coeff != -1)
      throw Error(ErrorCode::NormalizationFailed,
                  "chart equation for " + xi + " is not x^n - 1");
    chart.normalized_equations.push_back(xi + " = 1");
    sub[xi] = {{Rational(1), {}}};
  }
  for (size_t k = 0; k + 1 < model.vars.size(); ++k) chart.point.push_back("1");
  chart.point.push_back("0");
  chart.smooth = true;  // the chart intersection is a translate of the z-axis
  return chart;
}

bool normalization_check(const WeightedProjectiveModel& model,
                         const BranchSemigroup& s, long degree_bound) {
  std::map<std::string, Polynomial> param;
  for (int k = 0; k <= s.genus(); ++k)
    param["X" + std::to_string(k)] = {{Rational(1), {{"T", s.generators[k]}}}};
  for (const Polynomial& F : model.equations) {
    Polynomial r = substitute(F, param);
    if (degree_bound > 0)
      for (const Term& t : r) {
        auto it = t.exps.find("T");
        if (it != t.exps.end() && it->second > degree_bound) return false;
      }
    if (!r.empty()) return false;
  }
  return true;
}

}  // namespace branchforge
