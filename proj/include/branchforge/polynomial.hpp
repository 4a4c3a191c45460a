#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchforge/common.hpp"

namespace branchforge {

// Sparse exponent vector keyed by variable name ("u0", "X1", "Z", "t3", ...).
using Exponents = std::map<std::string, long>;

struct Term {
  Rational coeff;
  Exponents exps;
};

// A polynomial is a flat term list; zero-coefficient terms are never stored.
using Polynomial = std::vector<Term>;

using WeightTable = std::map<std::string, long>;

long term_weight(const Term& t, const WeightTable& weights);

// Combines like terms and drops zeros.
Polynomial normalize(const Polynomial& p);

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& values);

bool is_zero(const Polynomial& p);

std::string term_to_string(const Term& t);
std::string polynomial_to_string(const Polynomial& p);

}  // namespace branchforge
