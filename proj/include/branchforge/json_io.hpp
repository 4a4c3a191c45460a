#pragma once

#include <json.hpp>

#include "branchforge/deformation.hpp"
#include "branchforge/lattice_counter.hpp"
#include "branchforge/monomial_curve.hpp"
#include "branchforge/semigroup.hpp"

namespace branchforge {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const BranchSemigroup& s);
nlohmann::json to_json(const GcdLadder& ladder);
nlohmann::json to_json(const Polynomial& p, const std::vector<std::string>& vars,
                       const WeightTable& weights);
nlohmann::json to_json(const std::vector<BinomialEquation>& eqs,
                       const BranchSemigroup& s);
nlohmann::json to_json(const WeightedProjectiveModel& model);
nlohmann::json to_json(const MiniversalFamily& fam, const TangentBasis& basis);
nlohmann::json to_json(const InfinityChart& chart);
nlohmann::json to_json(const PuritySignature& sig);
nlohmann::json to_json(const ValidationReport& report);

// "4,6,13" or "(4; 6, 7)" -> semigroup
BranchSemigroup parse_semigroup_literal(const std::string& text);

}  // namespace branchforge
