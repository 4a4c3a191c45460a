#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchforge/monomial_curve.hpp"
#include "branchforge/polynomial.hpp"
#include "branchforge/semigroup.hpp"

namespace branchforge {

// Element of k[t^Gamma]: finite map t-exponent -> coefficient.
using SemigroupRingElement = std::map<long, Rational>;

// Column of the Jacobian matrix evaluated on the curve, viewed inside the
// twisted module (+) k[Gamma](n_i beta_i).  Row i entry t^a has degree
// a - n_i beta_i; all entries of a column share one degree.
struct GradedColumn {
  std::vector<SemigroupRingElement> entries;  // size g, rows i = 1..g
  long degree = 0;
  std::string var;                            // the u_j this column came from
};

// Single-monomial representative of a basis vector of the graded quotient.
struct TangentVector {
  long degree = 0;    // deg(s_j)
  int row = 0;        // 1..g: the equation the monomial sits in
  long t_exp = 0;     // the t^a entry
  Exponents lift;     // u-monomial with the same valuation
  long weight = 0;    // parameter weight, -degree
  std::string name;   // t1, t2, ...
};

struct TangentBasis {
  std::vector<TangentVector> vectors;
};

struct MiniversalFamily {
  BranchSemigroup semigroup;
  GcdLadder ladder;
  std::vector<Polynomial> equations;  // f~_i, i = 1..g
  std::vector<long> target_weights;   // n_i beta_i
  WeightTable weights;                // u_k and t_j weights
  std::vector<std::string> parameters;
  std::vector<std::string> tau_minus;  // negative-weight parameters
  std::vector<std::string> tau_plus;
};

struct WeightSplit {
  long tau_minus_dim = 0;  // the equisingular (constant-semigroup) subspace
  long tau_plus_dim = 0;
  std::vector<std::string> tau_minus;
  std::vector<std::string> tau_plus;
};

std::vector<GradedColumn> jacobian_columns(
    const std::vector<BinomialEquation>& eqs, const BranchSemigroup& s);
TangentBasis t1_basis(const std::vector<GradedColumn>& columns,
                      const BranchSemigroup& s);
MiniversalFamily miniversal_family(const TangentBasis& basis,
                                   const std::vector<BinomialEquation>& eqs,
                                   const BranchSemigroup& s);
WeightSplit weight_split(const MiniversalFamily& fam);
WeightedProjectiveModel homogenize_family(const MiniversalFamily& fam,
                                          const WeightedProjectiveModel& model);
bool b0_condition(const MiniversalFamily& fam,
                  const std::map<std::string, Rational>& point);

}  // namespace branchforge
