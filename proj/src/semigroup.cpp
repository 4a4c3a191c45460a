#include "branchforge/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace branchforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NonCoprimeGenerators: return "NonCoprimeGenerators";
    case ErrorCode::InvalidPuiseux: return "InvalidPuiseux";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::Unrepresentable: return "Unrepresentable";
    case ErrorCode::NormalizationFailed: return "NormalizationFailed";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroWeightParameter: return "ZeroWeightParameter";
    case ErrorCode::LiftFailed: return "LiftFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientFields: return "InsufficientFields";
    case ErrorCode::InterpolationMismatch: return "InterpolationMismatch";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

bool BranchSemigroup::contains(long a) const {
  if (a < 0) return false;
  if (a >= conductor) return true;
  return !std::binary_search(gaps.begin(), gaps.end(), a);
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.pass; });
}

namespace {

// Additive-closure sieve over [0, window].
std::vector<char> sieve_members(const std::vector<long>& gens, long window) {
  std::vector<char> member(static_cast<size_t>(window) + 1, 0);
  member[0] = 1;
  for (long a = 0; a <= window; ++a) {
    if (!member[a]) continue;
    for (long g : gens)
      if (a + g <= window) member[a + g] = 1;
  }
  return member;
}

}  // namespace

BranchSemigroup semigroup_from_generators(const std::vector<long>& gens_in) {
  if (gens_in.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  std::vector<long> gens = gens_in;
  for (long g : gens)
    if (g <= 0)
      throw Error(ErrorCode::EmptyGenerators, "generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  long d = 0;
  for (long g : gens) d = std::gcd(d, g);
  if (d != 1)
    throw Error(ErrorCode::NonCoprimeGenerators,
                "gcd of generators is " + std::to_string(d));

  // Schur's bound keeps the conductor below max(gens)^2; the tail assert below
  // re-checks before the window is trusted.
  long window = gens.back() * gens.back() + gens.back() + 1;
  std::vector<char> member = sieve_members(gens, window);

  BranchSemigroup s;
  long last_gap = -1;
  for (long a = 1; a <= window; ++a)
    if (!member[a]) {
      s.gaps.push_back(a);
      last_gap = a;
    }
  s.conductor = last_gap + 1;
  s.delta = static_cast<long>(s.gaps.size());
  if (window < s.conductor + gens.front())
    throw Error(ErrorCode::DimensionMismatch, "sieve window did not stabilize");
  for (long a = s.conductor; a <= s.conductor + gens.front(); ++a)
    if (!member[a])
      throw Error(ErrorCode::DimensionMismatch, "semi-infinite tail assertion failed");

  // Minimal generating set: g is minimal iff it is not a sum of two nonzero
  // members of the semigroup.
  for (long g : gens) {
    bool decomposable = false;
    for (long a = 1; a < g && !decomposable; ++a)
      if (member[a] && member[g - a]) decomposable = true;
    if (!decomposable) s.generators.push_back(g);
  }
  return s;
}

BranchSemigroup semigroup_from_puiseux(const PuiseuxData& p) {
  if (p.multiplicity <= 0)
    throw Error(ErrorCode::InvalidPuiseux, "multiplicity must be positive");
  long prev = p.multiplicity;
  long e = p.multiplicity;
  for (long b : p.exponents) {
    if (b <= prev)
      throw Error(ErrorCode::InvalidPuiseux, "exponents must be strictly increasing");
    if (b % e == 0)
      throw Error(ErrorCode::InvalidPuiseux,
                  "exponent " + std::to_string(b) + " divisible by gcd of predecessors");
    e = std::gcd(e, b);
    prev = b;
  }
  if (e != 1) throw Error(ErrorCode::InvalidPuiseux, "gcd of Puiseux data is not 1");

  // beta-bar recursion: bar_{i+1} = n_i bar_i + beta_{i+1} - beta_i with
  // n_i = e_{i-1} / e_i, e_i = gcd(beta_0, ..., beta_i).
  std::vector<long> evals{p.multiplicity};
  for (long b : p.exponents) evals.push_back(std::gcd(evals.back(), b));
  std::vector<long> bars{p.multiplicity};
  if (!p.exponents.empty()) bars.push_back(p.exponents[0]);
  for (size_t i = 1; i < p.exponents.size(); ++i) {
    long n = evals[i - 1] / evals[i];
    bars.push_back(n * bars.back() + p.exponents[i] - p.exponents[i - 1]);
  }
  BranchSemigroup s = semigroup_from_generators(bars);
  if (s.generators != bars)
    throw Error(ErrorCode::InvalidPuiseux, "derived generators are not minimal");
  return s;
}

GcdLadder gcd_ladder(const BranchSemigroup& s) {
  GcdLadder ladder;
  ladder.e.push_back(s.generators[0]);
  for (size_t i = 1; i < s.generators.size(); ++i) {
    long ei = std::gcd(s.generators[i], ladder.e.back());
    long ni = ladder.e.back() / ei;
    if (ni == 1)
      throw Error(ErrorCode::NotMinimal,
                  "n_" + std::to_string(i) + " = 1 contradicts minimality");
    ladder.n.push_back(ni);
    ladder.e.push_back(ei);
  }
  return ladder;
}

namespace {

// DFS maximizing the count on the highest generator index first.
bool greedy_represent(const std::vector<long>& gens, int j, long target,
                      std::vector<long>& out) {
  if (j == 0) {
    if (target % gens[0] != 0) return false;
    out[0] = target / gens[0];
    return true;
  }
  for (long cnt = target / gens[j]; cnt >= 0; --cnt) {
    out[j] = cnt;
    if (greedy_represent(gens, j - 1, target - cnt * gens[j], out)) return true;
  }
  return false;
}

}  // namespace

SubRepresentation represent(const BranchSemigroup& s, int i) {
  const int g = s.genus();
  if (i < 1 || i > g)
    throw Error(ErrorCode::Unrepresentable, "index out of range");
  GcdLadder ladder = gcd_ladder(s);
  long target = ladder.n[i - 1] * s.generators[i];
  std::vector<long> gens(s.generators.begin(), s.generators.begin() + i);
  std::vector<long> coeffs(gens.size(), 0);
  if (!greedy_represent(gens, i - 1, target, coeffs))
    throw Error(ErrorCode::Unrepresentable,
                "n_i * beta_i not representable by lower generators");
  SubRepresentation rep;
  rep.index = i;
  rep.coeffs = coeffs;
  return rep;
}

std::vector<long> monomial_lift(const BranchSemigroup& s, long a) {
  if (a < 0 || !s.contains(a))
    throw Error(ErrorCode::Unrepresentable,
                std::to_string(a) + " is not in the semigroup");
  std::vector<long> coeffs(s.generators.size(), 0);
  if (!greedy_represent(s.generators, s.genus(), a, coeffs))
    throw Error(ErrorCode::LiftFailed,
                "no monomial lift for degree " + std::to_string(a));
  return coeffs;
}

ValidationReport validate_plane_branch(const BranchSemigroup& s) {
  ValidationReport report;
  auto add = [&report](const std::string& name, bool pass, std::string detail = "") {
    report.checks.push_back({name, pass, std::move(detail)});
  };

  long d = 0;
  for (long g : s.generators) d = std::gcd(d, g);
  add("gcd_one", d == 1);

  bool minimal = true;
  for (size_t k = 0; k < s.generators.size() && minimal; ++k) {
    std::vector<long> others;
    for (size_t j = 0; j < s.generators.size(); ++j)
      if (j != k) others.push_back(s.generators[j]);
    if (others.empty()) continue;
    long g = s.generators[k];
    std::vector<char> member(static_cast<size_t>(g) + 1, 0);
    member[0] = 1;
    for (long a = 0; a <= g; ++a) {
      if (!member[a]) continue;
      for (long o : others)
        if (a + o <= g) member[a + o] = 1;
    }
    if (member[g]) minimal = false;
  }
  add("minimal_generating_set", minimal);

  bool membership = true, strong_increase = true;
  std::string detail;
  try {
    GcdLadder ladder = gcd_ladder(s);
    for (int i = 1; i <= s.genus(); ++i) {
      try {
        represent(s, i);
      } catch (const Error&) {
        membership = false;
      }
      if (i < s.genus() &&
          !(ladder.n[i - 1] * s.generators[i] < s.generators[i + 1])) {
        strong_increase = false;
        std::ostringstream os;
        os << "n_" << i << "*beta_" << i << " = "
           << ladder.n[i - 1] * s.generators[i] << " >= beta_" << i + 1 << " = "
           << s.generators[i + 1];
        detail = os.str();
      }
    }
  } catch (const Error&) {
    membership = false;
    strong_increase = false;
    detail = "gcd ladder not computable";
  }
  add("membership", membership);
  add("strong_increase", strong_increase, detail);

  bool symmetric = s.conductor == 2 * s.delta;
  for (long a = 0; a < s.conductor && symmetric; ++a)
    if (s.contains(a) == s.contains(s.conductor - 1 - a)) symmetric = false;
  add("symmetry", symmetric);

  return report;
}

}  // namespace branchforge
