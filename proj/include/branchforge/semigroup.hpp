#pragma once

#include <string>
#include <vector>

#include "branchforge/common.hpp"

namespace branchforge {

// Puiseux characteristic (beta_0; beta_1, ..., beta_g) of a plane branch.
struct PuiseuxData {
  long multiplicity = 0;            // beta_0
  std::vector<long> exponents;      // beta_1 < ... < beta_g
};

// Numerical semigroup of a plane branch with its discrete invariants.
struct BranchSemigroup {
  std::vector<long> generators;  // minimal generating set, increasing
  std::vector<long> gaps;        // N \ Gamma, sorted
  long delta = 0;                // #gaps
  long conductor = 0;            // least c with [c, inf) in Gamma

  // g in the standard indexing: generators are beta_0, ..., beta_g.
  int genus() const { return static_cast<int>(generators.size()) - 1; }

  bool contains(long a) const;
};

// e_0 > e_1 > ... > e_g = 1 with e_{i-1} = n_i e_i.
struct GcdLadder {
  std::vector<long> e;  // size g+1
  std::vector<long> n;  // size g, n[i-1] = n_i
};

// n_i beta_i = sum_j l_j beta_j over j < i, with l_j >= 0.
struct SubRepresentation {
  int index = 0;                // i
  std::vector<long> coeffs;     // l_0, ..., l_{i-1}
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

BranchSemigroup semigroup_from_generators(const std::vector<long>& gens);
BranchSemigroup semigroup_from_puiseux(const PuiseuxData& p);
GcdLadder gcd_ladder(const BranchSemigroup& s);
SubRepresentation represent(const BranchSemigroup& s, int i);
ValidationReport validate_plane_branch(const BranchSemigroup& s);

// Greedy-from-top representation of an arbitrary a in Gamma as a sum of
// generators; the same tie-break as represent(). Empty result for a = 0.
// Throws Unrepresentable if a is not in the semigroup.
std::vector<long> monomial_lift(const BranchSemigroup& s, long a);

}  // namespace branchforge
