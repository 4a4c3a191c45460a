// branchforge: numerical semigroups of plane branches, monomial-curve
// equations, equivariant miniversal deformations, and point counts of the
// associated lattice spaces over small finite fields.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "branchforge/deformation.hpp"
#include "branchforge/json_io.hpp"
#include "branchforge/lattice_counter.hpp"
#include "branchforge/monomial_curve.hpp"
#include "branchforge/semigroup.hpp"

using nlohmann::json;
using namespace branchforge;

namespace {

constexpr const char* kVersion = "0.1.0";

std::chrono::steady_clock::time_point g_start;

Budget budget_from_env() {
  Budget b;
  const char* env = std::getenv("BRANCHFORGE_BUDGET");
  if (!env) return b;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    long value = std::stol(item.substr(eq + 1));
    if (key == "q") b.max_q = value;
    else if (key == "c") b.max_c = value;
    else if (key == "delta") b.max_delta = value;
    else if (key == "semimodule_delta") b.max_semimodule_delta = value;
  }
  return b;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

void emit(const json& j, bool as_json, const std::string& out_path,
          const std::string& text) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    os = &file;
  }
  if (as_json)
    *os << j.dump(2) << "\n";
  else
    *os << text;
}

json report_shell(const std::string& subcommand, const json& input) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - g_start)
                     .count();
  return json{{"tool_version", kVersion},
              {"subcommand", subcommand},
              {"input", input},
              {"timing_ms", elapsed}};
}

int run_semigroup(const std::string& literal, bool as_json,
                  const std::string& out_path) {
  BranchSemigroup s = parse_semigroup_literal(literal);
  ValidationReport report = validate_plane_branch(s);
  json j = report_shell("semigroup", literal);
  j["semigroup"] = to_json(s);
  j["ladder"] = to_json(gcd_ladder(s));
  j["validation"] = to_json(report);
  std::ostringstream text;
  text << "semigroup <";
  for (size_t i = 0; i < s.generators.size(); ++i)
    text << (i ? "," : "") << s.generators[i];
  text << ">: delta=" << s.delta << " conductor=" << s.conductor << " gaps={";
  for (size_t i = 0; i < s.gaps.size(); ++i) text << (i ? "," : "") << s.gaps[i];
  text << "}\nplane-branch validation: "
       << (report.all_pass() ? "pass" : "FAIL") << "\n";
  emit(j, as_json, out_path, text.str());
  return report.all_pass() ? 0 : 1;
}

int run_curve(const std::string& literal, bool as_json,
              const std::string& out_path) {
  BranchSemigroup s = parse_semigroup_literal(literal);
  auto eqs = curve_equations(s);
  auto model = compactify(eqs, s);
  auto chart = infinity_chart(model);
  bool param_ok = check_parametrization(eqs, s);
  bool norm_ok = normalization_check(model, s, 0);
  json j = report_shell("curve", literal);
  j["equations"] = to_json(eqs, s);
  j["projective_model"] = to_json(model);
  j["infinity_chart"] = to_json(chart);
  j["parametrization_check"] = param_ok;
  j["normalization_check"] = norm_ok;
  std::ostringstream text;
  for (const BinomialEquation& eq : eqs)
    text << "f" << eq.index << " = "
         << polynomial_to_string(eq.as_polynomial()) << "  (weight "
         << eq.weight << ")\n";
  text << "parametrization check: " << (param_ok ? "pass" : "FAIL") << "\n"
       << "projective normalization check: " << (norm_ok ? "pass" : "FAIL")
       << "\ninfinity point: [";
  for (size_t i = 0; i < chart.point.size(); ++i)
    text << (i ? ":" : "") << chart.point[i];
  text << "] smooth=" << (chart.smooth ? "yes" : "no") << "\n";
  emit(j, as_json, out_path, text.str());
  return (param_ok && norm_ok) ? 0 : 1;
}

int run_deform(const std::string& literal, bool projective, bool as_json,
               const std::string& out_path) {
  BranchSemigroup s = parse_semigroup_literal(literal);
  auto eqs = curve_equations(s);
  auto columns = jacobian_columns(eqs, s);
  TangentBasis basis = t1_basis(columns, s);
  MiniversalFamily fam = miniversal_family(basis, eqs, s);
  json j = report_shell("deform", literal);
  j["family"] = to_json(fam, basis);
  if (projective) {
    auto model = compactify(eqs, s);
    j["projective_family"] = to_json(homogenize_family(fam, model));
  }
  std::ostringstream text;
  text << "dim T^1 = " << basis.vectors.size() << " (2*delta = " << 2 * s.delta
       << ")\n";
  for (size_t i = 0; i < fam.equations.size(); ++i)
    text << "f~" << i + 1 << " = " << polynomial_to_string(fam.equations[i])
         << "\n";
  text << "parameter weights:";
  for (const TangentVector& v : basis.vectors)
    text << " " << v.name << "=" << v.weight;
  text << "\ntau- = " << fam.tau_minus.size()
       << ", tau+ = " << fam.tau_plus.size() << "\n";
  emit(j, as_json, out_path, text.str());
  return 0;
}

int run_count(const std::string& literal, const std::vector<long>& qs,
              bool stratify, const std::string& oracle, bool as_json,
              const std::string& out_path, int threads, const Budget& budget) {
  BranchSemigroup s = parse_semigroup_literal(literal);
  if (oracle == "naive") {
    json counts = json::object();
    std::ostringstream text;
    for (long q : qs) {
      auto [p, k] = [&] {
        long pp = 2;
        while (q % pp != 0) ++pp;
        int kk = 0;
        long rest = q;
        while (rest % pp == 0) { rest /= pp; ++kk; }
        if (rest != 1) throw Error(ErrorCode::UnsupportedField, "q not a prime power");
        return std::pair<long, int>(pp, kk);
      }();
      FiniteField F(p, k);
      TruncatedModule T = build_truncated_module(s, F, budget);
      long n = static_cast<long>(
          enumerate_stable_submodules_naive(T).submodules.size());
      counts[std::to_string(q)] = n;
      text << "q=" << q << ": " << n << " (naive filter)\n";
    }
    json j = report_shell("count", literal);
    j["oracle"] = "naive";
    j["counts"] = counts;
    emit(j, as_json, out_path, text.str());
    return 0;
  }
  PuritySignature sig = purity_signature(s, qs, budget, threads);
  json j = report_shell("count", literal);
  json body = to_json(sig);
  if (!stratify) body.erase("strata");
  for (auto& [key, value] : body.items()) j[key] = value;
  std::ostringstream text;
  for (const auto& [q, n] : sig.counts) text << "q=" << q << ": " << n << "\n";
  text << "polynomial:";
  for (size_t d = 0; d < sig.polynomial.size(); ++d)
    text << " " << sig.polynomial[d] << (d ? "*q^" + std::to_string(d) : "");
  text << "\nsemimodules: " << sig.semimodule_count << "\npurity flags: "
       << (sig.pass() ? "pass" : "FAIL") << "\n";
  if (stratify)
    for (const StratumRecord& rec : sig.strata) {
      text << "stratum S={";
      for (size_t i = 0; i < rec.added_gaps.size(); ++i)
        text << (i ? "," : "") << rec.added_gaps[i];
      text << "}: exponent " << rec.exponent
           << (rec.power_of_q ? "" : " (NOT a power of q)") << "\n";
    }
  emit(j, as_json, out_path, text.str());
  return sig.pass() ? 0 : 1;
}

struct CorpusEntry {
  std::string name;
  std::vector<long> gens;
  std::vector<long> qs;  // empty: skip counting
};

json verify_entry(const CorpusEntry& entry, const Budget& budget, int threads) {
  json verdicts = json::object();
  BranchSemigroup s = semigroup_from_generators(entry.gens);
  verdicts["semigroup_valid"] = validate_plane_branch(s).all_pass();

  auto eqs = curve_equations(s);
  auto model = compactify(eqs, s);
  bool curve_ok = check_parametrization(eqs, s) &&
                  normalization_check(model, s, 0);
  try {
    InfinityChart chart = infinity_chart(model);
    curve_ok = curve_ok && chart.smooth &&
               chart.point.size() == s.generators.size() + 1;
  } catch (const Error&) {
    curve_ok = false;
  }
  verdicts["curve_identities"] = curve_ok;

  try {
    TangentBasis basis = t1_basis(jacobian_columns(eqs, s), s);
    MiniversalFamily fam = miniversal_family(basis, eqs, s);
    bool ok = static_cast<long>(basis.vectors.size()) == 2 * s.delta;
    for (const TangentVector& v : basis.vectors)
      if (v.weight == 0) ok = false;
    verdicts["t1_dimension"] = ok;
    // The origin lies in B_0 exactly when no parameter has negative weight;
    // otherwise the maximal-degree term is a deformation monomial vanishing
    // at 0.
    verdicts["b0_at_origin"] =
        b0_condition(fam, {}) == fam.tau_minus.empty();
  } catch (const Error&) {
    verdicts["t1_dimension"] = false;
  }

  if (entry.qs.empty()) {
    verdicts["purity_signature"] = "skipped";
  } else {
    PuritySignature sig = purity_signature(s, entry.qs, budget, threads);
    verdicts["purity_signature"] = sig.pass();
    verdicts["semimodule_match"] = sig.flags.value_at_one_matches_semimodules;
  }
  return verdicts;
}

int run_verify(bool as_json, const std::string& out_path, int threads,
               const Budget& budget) {
  const std::vector<CorpusEntry> corpus = {
      {"2,3", {2, 3}, {2, 3, 5}},
      {"2,5", {2, 5}, {2, 3, 5}},
      {"3,4", {3, 4}, {2, 3, 5, 7}},
      {"4,6,13", {4, 6, 13}, {}},  // counting past the desk-scale budget
  };
  json entries = json::object();
  bool all_ok = true;
  for (const CorpusEntry& entry : corpus) {
    json verdicts = verify_entry(entry, budget, threads);
    for (const auto& [name, v] : verdicts.items())
      if (v.is_boolean() && !v.get<bool>()) all_ok = false;
    entries[entry.name] = verdicts;
  }
  json j = report_shell("verify", "corpus");
  j["entries"] = entries;
  j["all_pass"] = all_ok;
  std::ostringstream text;
  for (const auto& [name, verdicts] : entries.items()) {
    text << "<" << name << ">:";
    for (const auto& [check, v] : verdicts.items())
      text << " " << check << "="
           << (v.is_boolean() ? (v.get<bool>() ? "true" : "false")
                              : v.get<std::string>());
    text << "\n";
  }
  text << (all_ok ? "verify: all checks passed\n" : "verify: FAILURES\n");
  emit(j, as_json, out_path, text.str());
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  g_start = std::chrono::steady_clock::now();
  CLI::App app{"exact invariants of plane-branch singularities and their "
               "finite-field point counts"};
  app.require_subcommand(1);

  std::string literal, out_path, q_list = "2,3,5", oracle;
  bool as_json = false, projective = false, stratify = false;
  int threads = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_semigroup) {
    if (needs_semigroup)
      cmd->add_option("--semigroup,--gens", literal,
                      "generators \"4,6,13\" or Puiseux tuple \"(4; 6, 7)\"")
          ->required();
    cmd->add_flag("--json", as_json, "emit a JSON report");
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  CLI::App* sg = app.add_subcommand("semigroup", "semigroup invariants");
  add_common(sg, true);
  CLI::App* curve = app.add_subcommand("curve", "monomial curve equations");
  add_common(curve, true);
  CLI::App* deform = app.add_subcommand("deform", "miniversal deformation");
  add_common(deform, true);
  deform->add_flag("--projective", projective, "homogenized family over P");
  CLI::App* count = app.add_subcommand("count", "point counts over F_q");
  add_common(count, true);
  count->add_option("--q", q_list, "comma-separated q values");
  count->add_flag("--stratify", stratify, "per-semimodule stratum table");
  count->add_option("--oracle", oracle, "\"naive\" for the all-subspace filter");
  count->add_option("--threads", threads, "worker threads");
  CLI::App* verify = app.add_subcommand("verify", "full corpus verification");
  add_common(verify, false);
  verify->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Budget budget = budget_from_env();
  try {
    if (sg->parsed()) return run_semigroup(literal, as_json, out_path);
    if (curve->parsed()) return run_curve(literal, as_json, out_path);
    if (deform->parsed())
      return run_deform(literal, projective, as_json, out_path);
    if (count->parsed())
      return run_count(literal, parse_longs(q_list), stratify, oracle, as_json,
                       out_path, threads, budget);
    if (verify->parsed()) return run_verify(as_json, out_path, threads, budget);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? 3
           : e.code() == ErrorCode::UsageError   ? 2
                                                 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
