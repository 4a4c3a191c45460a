#include "branchforge/polynomial.hpp"

#include <sstream>

namespace branchforge {

long term_weight(const Term& t, const WeightTable& weights) {
  long w = 0;
  for (const auto& [var, e] : t.exps) w += e * weights.at(var);
  return w;
}

Polynomial normalize(const Polynomial& p) {
  std::map<Exponents, Rational> acc;
  for (const Term& t : p) {
    Exponents key;
    for (const auto& [var, e] : t.exps)
      if (e != 0) key[var] = e;
    acc[key] += t.coeff;
  }
  Polynomial out;
  for (auto& [exps, coeff] : acc)
    if (coeff != 0) out.push_back({coeff, exps});
  return out;
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const Term& ta : a)
    for (const Term& tb : b) {
      Term t;
      t.coeff = ta.coeff * tb.coeff;
      t.exps = ta.exps;
      for (const auto& [var, e] : tb.exps) t.exps[var] += e;
      out.push_back(t);
    }
  return normalize(out);
}

Polynomial power(const Polynomial& base, long e) {
  Polynomial out{{Rational(1), {}}};
  for (long i = 0; i < e; ++i) out = multiply(out, base);
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& values) {
  Polynomial out;
  for (const Term& t : p) {
    Polynomial term{{t.coeff, {}}};
    for (const auto& [var, e] : t.exps) {
      auto it = values.find(var);
      if (it == values.end()) {
        Polynomial keep{{Rational(1), {{var, e}}}};
        term = multiply(term, keep);
      } else {
        term = multiply(term, power(it->second, e));
      }
    }
    out.insert(out.end(), term.begin(), term.end());
  }
  return normalize(out);
}

bool is_zero(const Polynomial& p) { return normalize(p).empty(); }

std::string term_to_string(const Term& t) {
  std::ostringstream os;
  Rational c = t.coeff;
  bool negative = c < 0;
  if (negative) c = -c;
  if (negative) os << "-";
  bool coeff_shown = false;
  if (c != 1 || t.exps.empty()) {
    os << c;
    coeff_shown = true;
  }
  bool first = true;
  for (const auto& [var, e] : t.exps) {
    if (!first || coeff_shown) os << "*";
    os << var;
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string polynomial_to_string(const Polynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p) {
    std::string s = term_to_string(t);
    if (first) {
      os << s;
    } else if (!s.empty() && s[0] == '-') {
      os << " - " << s.substr(1);
    } else {
      os << " + " << s;
    }
    first = false;
  }
  return os.str();
}

}  // namespace branchforge
