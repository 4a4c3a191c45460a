#include "branchforge/deformation.hpp"

#include <algorithm>

namespace branchforge {

namespace {

long u_weight(const Exponents& exps, const BranchSemigroup& s) {
  long w = 0;
  for (const auto& [var, e] : exps) {
    if (var.size() > 1 && var[0] == 'u') {
      int k = std::stoi(var.substr(1));
      w += e * s.generators[k];
    }
  }
  return w;
}

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<int> pivots;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = Rational(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational factor = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<GradedColumn> jacobian_columns(
    const std::vector<BinomialEquation>& eqs, const BranchSemigroup& s) {
  const int g = s.genus();
  std::vector<long> shifts;  // n_i beta_i per row
  for (const BinomialEquation& eq : eqs) shifts.push_back(eq.weight);

  std::vector<GradedColumn> columns;
  for (int j = 0; j <= g; ++j) {
    std::string uj = "u" + std::to_string(j);
    GradedColumn col;
    col.var = uj;
    col.degree = -s.generators[j];
    col.entries.resize(g);
    for (int i = 0; i < g; ++i) {
      for (const Term& t : eqs[i].as_polynomial()) {
        auto it = t.exps.find(uj);
        if (it == t.exps.end() || it->second == 0) continue;
        // d/du_j, then u_k -> t^{beta_k}
        Term dt;
        dt.coeff = t.coeff * it->second;
        dt.exps = t.exps;
        dt.exps[uj] -= 1;
        long a = u_weight(dt.exps, s);
        col.entries[i][a] += dt.coeff;
        if (a - shifts[i] != col.degree)
          throw Error(ErrorCode::DimensionMismatch,
                      "Jacobian column " + uj + " is not homogeneous");
      }
      for (auto it = col.entries[i].begin(); it != col.entries[i].end();)
        it = (it->second == 0) ? col.entries[i].erase(it) : std::next(it);
    }
    columns.push_back(std::move(col));
  }
  return columns;
}

TangentBasis t1_basis(const std::vector<GradedColumn>& columns,
                      const BranchSemigroup& s) {
  const int g = s.genus();
  std::vector<long> shifts;
  {
    GcdLadder ladder = gcd_ladder(s);
    for (int i = 1; i <= g; ++i) shifts.push_back(ladder.n[i - 1] * s.generators[i]);
  }
  if (shifts.empty()) {
    if (s.delta != 0)
      throw Error(ErrorCode::DimensionMismatch, "no equations but delta > 0");
    return {};
  }
  long max_shift = *std::max_element(shifts.begin(), shifts.end());
  const long target = 2 * s.delta;
  const long streak_needed = std::max<long>(s.conductor, 1);
  // Stabilization is empirical; the hard cap guards against runaway input.
  const long d_cap = 4 * std::max<long>(s.conductor, 1) + max_shift + 16;

  TangentBasis basis;
  long streak = 0;
  for (long d = -max_shift; d <= d_cap; ++d) {
    // Ambient coords of degree d: (row i, a) with a = d + n_i beta_i in Gamma.
    // Column order: smallest Gamma-degree first, row index ascending.
    std::vector<std::pair<long, int>> coords;  // (a, row)
    for (int i = 0; i < g; ++i) {
      long a = d + shifts[i];
      if (a >= 0 && s.contains(a)) coords.push_back({a, i});
    }
    std::sort(coords.begin(), coords.end());
    auto coord_index = [&coords](int row, long a) {
      for (size_t k = 0; k < coords.size(); ++k)
        if (coords[k].first == a && coords[k].second == row)
          return static_cast<int>(k);
      return -1;
    };

    std::vector<std::vector<Rational>> rel;
    for (const GradedColumn& col : columns) {
      long b = d - col.degree;  // t^b * column has degree d, -degree = beta_j
      if (b < 0 || !s.contains(b)) continue;
      std::vector<Rational> row(coords.size(), Rational(0));
      for (int i = 0; i < g; ++i)
        for (const auto& [e, coeff] : col.entries[i]) {
          int idx = coord_index(i, b + e);
          if (idx < 0)
            throw Error(ErrorCode::DimensionMismatch,
                        "relation leaves the graded piece");
          row[idx] += coeff;
        }
      rel.push_back(std::move(row));
    }

    std::vector<int> pivots = rref(rel);
    long quotient_dim = static_cast<long>(coords.size()) -
                        static_cast<long>(pivots.size());
    if (quotient_dim == 0) {
      ++streak;
    } else {
      streak = 0;
      size_t p = 0;
      for (size_t c = 0; c < coords.size(); ++c) {
        if (p < pivots.size() && pivots[p] == static_cast<int>(c)) {
          ++p;
          continue;
        }
        if (d == 0)
          throw Error(ErrorCode::ZeroWeightParameter,
                      "tangent basis vector of degree 0");
        TangentVector v;
        v.degree = d;
        v.row = coords[c].second + 1;
        v.t_exp = coords[c].first;
        v.weight = -d;
        std::vector<long> lift = monomial_lift(s, v.t_exp);
        for (int k = 0; k <= g; ++k)
          if (lift[k] != 0) v.lift["u" + std::to_string(k)] = lift[k];
        basis.vectors.push_back(std::move(v));
      }
    }
    if (static_cast<long>(basis.vectors.size()) > target)
      throw Error(ErrorCode::DimensionMismatch,
                  "graded quotient exceeds 2*delta");
    if (static_cast<long>(basis.vectors.size()) == target &&
        streak >= streak_needed)
      break;
  }
  if (static_cast<long>(basis.vectors.size()) != target)
    throw Error(ErrorCode::DimensionMismatch,
                "graded quotient dimension " +
                    std::to_string(basis.vectors.size()) + " != 2*delta = " +
                    std::to_string(target));
  for (size_t j = 0; j < basis.vectors.size(); ++j)
    basis.vectors[j].name = "t" + std::to_string(j + 1);
  return basis;
}

MiniversalFamily miniversal_family(const TangentBasis& basis,
                                   const std::vector<BinomialEquation>& eqs,
                                   const BranchSemigroup& s) {
  MiniversalFamily fam;
  fam.semigroup = s;
  fam.ladder = gcd_ladder(s);
  for (int k = 0; k <= s.genus(); ++k)
    fam.weights["u" + std::to_string(k)] = s.generators[k];
  for (const BinomialEquation& eq : eqs) {
    fam.equations.push_back(eq.as_polynomial());
    fam.target_weights.push_back(eq.weight);
  }
  for (const TangentVector& v : basis.vectors) {
    fam.parameters.push_back(v.name);
    fam.weights[v.name] = v.weight;
    Term t;
    t.coeff = 1;
    t.exps = v.lift;
    t.exps[v.name] = 1;
    fam.equations[v.row - 1].push_back(t);
    if (v.weight < 0)
      fam.tau_minus.push_back(v.name);
    else
      fam.tau_plus.push_back(v.name);
  }
  // every term of f~_i carries total weight n_i beta_i
  for (size_t i = 0; i < fam.equations.size(); ++i)
    for (const Term& t : fam.equations[i])
      if (term_weight(t, fam.weights) != fam.target_weights[i])
        throw Error(ErrorCode::LiftFailed, "deformed equation not homogeneous");
  return fam;
}

WeightSplit weight_split(const MiniversalFamily& fam) {
  WeightSplit split;
  split.tau_minus = fam.tau_minus;
  split.tau_plus = fam.tau_plus;
  split.tau_minus_dim = static_cast<long>(fam.tau_minus.size());
  split.tau_plus_dim = static_cast<long>(fam.tau_plus.size());
  return split;
}

WeightedProjectiveModel homogenize_family(const MiniversalFamily& fam,
                                          const WeightedProjectiveModel& model) {
  WeightedProjectiveModel out;
  out.vars = model.vars;
  out.degrees = model.degrees;
  for (size_t i = 0; i < fam.equations.size(); ++i) {
    long target = fam.target_weights[i];
    Polynomial F;
    for (const Term& t : fam.equations[i]) {
      Term h;
      h.coeff = t.coeff;
      long x_degree = 0;
      for (const auto& [var, e] : t.exps) {
        if (var.size() > 1 && var[0] == 'u') {
          std::string X = "X" + var.substr(1);
          h.exps[X] = e;
          x_degree += e * out.degrees.at(X);
        } else {
          h.exps[var] = e;  // parameters ride along
        }
      }
      long z_exp = target - x_degree;  // equals the parameter weight
      if (z_exp != 0) h.exps["Z"] = z_exp;
      if (z_exp < 0) out.negative_z_terms.push_back({static_cast<int>(i), h});
      F.push_back(h);
    }
    out.equations.push_back(F);
    out.target_degrees.push_back(target);
  }
  return out;
}

bool b0_condition(const MiniversalFamily& fam,
                  const std::map<std::string, Rational>& point) {
  for (const Polynomial& eq : fam.equations) {
    long max_degree = 0;
    for (const Term& t : eq)
      max_degree = std::max(max_degree, u_weight(t.exps, fam.semigroup));
    // group maximal-degree terms by u-monomial, substitute the parameters
    std::map<Exponents, Rational> totals;
    for (const Term& t : eq) {
      if (u_weight(t.exps, fam.semigroup) != max_degree) continue;
      Rational c = t.coeff;
      Exponents mono;
      for (const auto& [var, e] : t.exps) {
        if (var.size() > 1 && var[0] == 'u') {
          mono[var] = e;
        } else {
          Rational val = point.count(var) ? point.at(var) : Rational(0);
          for (long r = 0; r < e; ++r) c *= val;
        }
      }
      totals[mono] += c;
    }
    bool any = false;
    for (const auto& [mono, c] : totals)
      if (c != 0) any = true;
    if (!any) return false;
  }
  return true;
}

}  // namespace branchforge
