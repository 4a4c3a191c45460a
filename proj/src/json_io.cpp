#include "branchforge/json_io.hpp"

#include <sstream>

namespace branchforge {

using nlohmann::json;

json to_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    Integer n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<long>::min() &&
        n <= std::numeric_limits<long>::max())
      return static_cast<long>(n);
  }
  return r.str();
}

json to_json(const BranchSemigroup& s) {
  return json{{"generators", s.generators},
              {"gaps", s.gaps},
              {"delta", s.delta},
              {"conductor", s.conductor}};
}

json to_json(const GcdLadder& ladder) {
  return json{{"e", ladder.e}, {"n", ladder.n}};
}

json to_json(const Polynomial& p, const std::vector<std::string>& vars,
             const WeightTable& weights) {
  json terms = json::array();
  for (const Term& t : p) {
    json exps = json::object();
    for (const auto& [var, e] : t.exps) exps[var] = e;
    terms.push_back(json{{"coeff", to_json(t.coeff)}, {"exps", exps}});
  }
  json w = json::array();
  for (const std::string& v : vars) w.push_back(weights.at(v));
  return json{{"vars", vars}, {"weights", w}, {"terms", terms},
              {"text", polynomial_to_string(p)}};
}

json to_json(const std::vector<BinomialEquation>& eqs,
             const BranchSemigroup& s) {
  std::vector<std::string> vars;
  WeightTable weights;
  for (int k = 0; k <= s.genus(); ++k) {
    vars.push_back("u" + std::to_string(k));
    weights[vars.back()] = s.generators[k];
  }
  json out = json::array();
  for (const BinomialEquation& eq : eqs) {
    json j = to_json(eq.as_polynomial(), vars, weights);
    j["index"] = eq.index;
    j["weight"] = eq.weight;
    out.push_back(j);
  }
  return out;
}

json to_json(const WeightedProjectiveModel& model) {
  json eqs = json::array();
  for (size_t i = 0; i < model.equations.size(); ++i) {
    json j = to_json(model.equations[i], model.vars, model.degrees);
    j["degree"] = model.target_degrees[i];
    eqs.push_back(j);
  }
  json flagged = json::array();
  for (const auto& [i, term] : model.negative_z_terms)
    flagged.push_back(json{{"equation", i}, {"term", term_to_string(term)}});
  return json{{"vars", model.vars},
              {"degrees", model.degrees},
              {"equations", eqs},
              {"negative_z_terms", flagged}};
}

json to_json(const MiniversalFamily& fam, const TangentBasis& basis) {
  std::vector<std::string> vars;
  for (int k = 0; k <= fam.semigroup.genus(); ++k)
    vars.push_back("u" + std::to_string(k));
  std::vector<std::string> all_vars = vars;
  for (const std::string& t : fam.parameters) all_vars.push_back(t);
  json eqs = json::array();
  for (size_t i = 0; i < fam.equations.size(); ++i) {
    json j = to_json(fam.equations[i], all_vars, fam.weights);
    j["weight"] = fam.target_weights[i];
    eqs.push_back(j);
  }
  json params = json::array();
  for (const TangentVector& v : basis.vectors) {
    Exponents lift = v.lift;
    params.push_back(json{{"name", v.name},
                          {"weight", v.weight},
                          {"column", v.row},
                          {"degree", v.degree},
                          {"t_exp", v.t_exp},
                          {"lift", lift}});
  }
  return json{{"equations", eqs},
              {"parameters", params},
              {"tau_minus", fam.tau_minus},
              {"tau_plus", fam.tau_plus}};
}

json to_json(const InfinityChart& chart) {
  return json{{"point", chart.point},
              {"smooth", chart.smooth},
              {"normalized_equations", chart.normalized_equations}};
}

json to_json(const PuritySignature& sig) {
  json counts = json::object();
  for (const auto& [q, n] : sig.counts) counts[std::to_string(q)] = n;
  json poly = json::array();
  for (const Rational& c : sig.polynomial) poly.push_back(to_json(c));
  json strata = json::array();
  for (const StratumRecord& rec : sig.strata) {
    json by_q = json::object();
    for (const auto& [q, n] : rec.count_by_q) by_q[std::to_string(q)] = n;
    strata.push_back(json{{"delta_set", rec.added_gaps},
                          {"exponent", rec.exponent},
                          {"power_of_q", rec.power_of_q},
                          {"counts", by_q}});
  }
  return json{{"counts", counts},
              {"polynomial", poly},
              {"strata", strata},
              {"semimodule_count", sig.semimodule_count},
              {"flags",
               json{{"integer_coefficients", sig.flags.integer_coefficients},
                    {"nonnegative_coefficients",
                     sig.flags.nonnegative_coefficients},
                    {"monic_of_degree_delta", sig.flags.monic_of_degree_delta},
                    {"value_at_one_matches_semimodules",
                     sig.flags.value_at_one_matches_semimodules},
                    {"strata_powers_of_q", sig.flags.strata_powers_of_q},
                    {"out_of_sample_consistent",
                     sig.flags.out_of_sample_consistent},
                    {"q2_deviation", sig.flags.q2_deviation}}}};
}

json to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const ValidationCheck& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"checks", checks}, {"all_pass", report.all_pass()}};
}

BranchSemigroup parse_semigroup_literal(const std::string& text) {
  auto parse_ints = [](const std::string& s, char sep) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
      size_t a = item.find_first_not_of(" \t");
      if (a == std::string::npos)
        throw Error(ErrorCode::UsageError, "empty entry in integer list");
      out.push_back(std::stol(item.substr(a)));
    }
    return out;
  };
  std::string t = text;
  size_t open = t.find('(');
  if (open != std::string::npos) {
    size_t close = t.find(')');
    size_t semi = t.find(';');
    if (close == std::string::npos || semi == std::string::npos || semi > close)
      throw Error(ErrorCode::UsageError,
                  "Puiseux literal must look like (b0; b1, b2)");
    PuiseuxData p;
    p.multiplicity = std::stol(t.substr(open + 1, semi - open - 1));
    p.exponents = parse_ints(t.substr(semi + 1, close - semi - 1), ',');
    return semigroup_from_puiseux(p);
  }
  return semigroup_from_generators(parse_ints(t, ','));
}

}  // namespace branchforge
