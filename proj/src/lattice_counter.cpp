#include "branchforge/lattice_counter.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <string>
#include <thread>

namespace branchforge {

namespace {

using El = FiniteField::El;
using Vec = std::vector<El>;
using Rows = std::vector<Vec>;

int leading_index(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) return static_cast<int>(i);
  return -1;
}

// Reduce v against RREF rows in place; returns false if v reduces to zero.
bool reduce(const FiniteField& F, const Rows& rows, Vec& v) {
  for (const Vec& row : rows) {
    int p = leading_index(row);
    if (p < 0 || v[p] == 0) continue;
    El factor = v[p];
    for (size_t j = p; j < v.size(); ++j)
      v[j] = F.sub(v[j], F.mul(factor, row[j]));
  }
  return leading_index(v) >= 0;
}

// Insert v into an RREF basis, keeping rows sorted by pivot and fully reduced.
bool insert_row(const FiniteField& F, Rows& rows, Vec v) {
  if (!reduce(F, rows, v)) return false;
  int p = leading_index(v);
  El inv = F.inv(v[p]);
  for (size_t j = p; j < v.size(); ++j) v[j] = F.mul(v[j], inv);
  for (Vec& row : rows) {
    if (row[p] == 0) continue;
    El factor = row[p];
    for (size_t j = p; j < v.size(); ++j)
      row[j] = F.sub(row[j], F.mul(factor, v[j]));
  }
  auto pos = std::find_if(rows.begin(), rows.end(), [p](const Vec& r) {
    return leading_index(r) > p;
  });
  rows.insert(pos, std::move(v));
  return true;
}

Vec apply(const FiniteField& F,
          const std::vector<std::vector<El>>& m, const Vec& v) {
  Vec out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    El acc = 0;
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] && v[j]) acc = F.add(acc, F.mul(m[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

// Close the span of rows under all multipliers.
void close(const TruncatedModule& T, Rows& rows) {
  const FiniteField& F = *T.field;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t r = 0; r < rows.size(); ++r)
      for (const auto& m : T.multipliers)
        if (insert_row(F, rows, apply(F, m, rows[r]))) changed = true;
  }
}

std::string key_of(const Rows& rows) {
  std::string key;
  key.reserve(rows.size() * (rows.empty() ? 0 : rows[0].size()) + 1);
  key.push_back(static_cast<char>(rows.size()));
  for (const Vec& row : rows)
    for (El e : row) key.push_back(static_cast<char>(e));
  return key;
}

StableSubmodule make_submodule(const TruncatedModule& T, Rows rows) {
  StableSubmodule m;
  m.dimension = static_cast<int>(rows.size());
  for (const Vec& row : rows) m.value_set.push_back(leading_index(row));
  std::sort(m.value_set.begin(), m.value_set.end());
  m.basis = std::move(rows);
  return m;
}

bool is_stable(const TruncatedModule& T, const Rows& rows) {
  const FiniteField& F = *T.field;
  for (const Vec& row : rows)
    for (const auto& m : T.multipliers) {
      Vec image = apply(F, m, row);
      if (reduce(F, rows, image)) return false;
    }
  return true;
}

}  // namespace

bool PuritySignature::pass() const {
  return flags.integer_coefficients && flags.nonnegative_coefficients &&
         flags.monic_of_degree_delta &&
         flags.value_at_one_matches_semimodules && flags.strata_powers_of_q &&
         flags.out_of_sample_consistent && !flags.q2_deviation;
}

TruncatedModule build_truncated_module(const BranchSemigroup& s,
                                       const FiniteField& F,
                                       const Budget& budget) {
  if (F.q() > budget.max_q)
    throw Error(ErrorCode::BudgetExceeded,
                "q = " + std::to_string(F.q()) + " exceeds cap " +
                    std::to_string(budget.max_q));
  if (s.conductor > budget.max_c)
    throw Error(ErrorCode::BudgetExceeded,
                "conductor " + std::to_string(s.conductor) + " exceeds cap " +
                    std::to_string(budget.max_c));
  if (s.delta > budget.max_delta)
    throw Error(ErrorCode::BudgetExceeded,
                "delta " + std::to_string(s.delta) + " exceeds cap " +
                    std::to_string(budget.max_delta));
  TruncatedModule T;
  T.semigroup = s;
  T.field = &F;
  T.c = s.conductor;
  for (long beta : s.generators) {
    std::vector<std::vector<El>> m(T.c, std::vector<El>(T.c, 0));
    for (long a = 0; a + beta < T.c; ++a) m[a + beta][a] = 1;
    T.multipliers.push_back(std::move(m));
  }
  return T;
}

StableSubmoduleSet enumerate_stable_submodules(const TruncatedModule& T) {
  const FiniteField& F = *T.field;
  const long c = T.c;
  const long q = F.q();
  StableSubmoduleSet out;
  if (c == 0) {
    out.submodules.push_back(StableSubmodule{});
    return out;
  }

  std::set<std::string> seen;
  std::vector<Rows> frontier;
  auto record = [&](Rows rows) {
    std::string key = key_of(rows);
    if (seen.insert(key).second) {
      frontier.push_back(rows);
      out.submodules.push_back(make_submodule(T, std::move(rows)));
    }
  };

  // Seeds: cyclic modules R*v over all v with nonzero constant term,
  // normalized to v[0] = 1 (scaling does not change the span).
  Vec v(c, 0);
  v[0] = 1;
  while (true) {
    Rows rows;
    insert_row(F, rows, v);
    close(T, rows);
    record(std::move(rows));
    // odometer over coordinates 1..c-1
    long pos = 1;
    while (pos < c && v[pos] == q - 1) v[pos++] = 0;
    if (pos == c) break;
    ++v[pos];
  }

  // BFS closure: M -> M + R*w.  Candidates w range over the canonical coset
  // representatives: supported on non-pivot coordinates, leading coefficient 1.
  size_t head = 0;
  while (head < frontier.size()) {
    Rows rows = frontier[head++];
    if (static_cast<long>(rows.size()) == c) continue;
    std::vector<int> free_pos;
    {
      std::vector<char> pivot(c, 0);
      for (const Vec& row : rows) pivot[leading_index(row)] = 1;
      for (int i = 0; i < c; ++i)
        if (!pivot[i]) free_pos.push_back(i);
    }
    const int nf = static_cast<int>(free_pos.size());
    std::vector<El> digits(nf, 0);
    while (true) {
      int pos = 0;
      while (pos < nf && digits[pos] == q - 1) digits[pos++] = 0;
      if (pos == nf) break;
      ++digits[pos];
      int lead = nf - 1;
      while (digits[lead] == 0) --lead;
      if (digits[lead] != 1) continue;  // scale representative once
      Vec w(c, 0);
      for (int i = 0; i < nf; ++i) w[free_pos[i]] = digits[i];
      Rows bigger = rows;
      insert_row(F, bigger, std::move(w));
      close(T, bigger);
      record(std::move(bigger));
    }
  }
  return out;
}

StableSubmoduleSet enumerate_stable_submodules_naive(const TruncatedModule& T) {
  const FiniteField& F = *T.field;
  const long c = T.c;
  const long q = F.q();
  StableSubmoduleSet out;
  if (c == 0) {
    out.submodules.push_back(StableSubmodule{});
    return out;
  }
  double logsize = c * std::log2(static_cast<double>(q));
  if (logsize > 22)
    throw Error(ErrorCode::BudgetExceeded, "q^c > 2^22 for the naive filter");

  // All RREFs whose pivot set contains 0 (a valuation-0 vector exists exactly
  // then), filtered for stability.
  for (long mask = 1; mask < (1L << c); mask += 2) {
    std::vector<int> pivots;
    for (int i = 0; i < c; ++i)
      if (mask & (1L << i)) pivots.push_back(i);
    const int r = static_cast<int>(pivots.size());
    // free slots: per row, non-pivot columns right of its pivot
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
      for (int j = pivots[i] + 1; j < c; ++j)
        if (!(mask & (1L << j))) slots.push_back({i, j});
    std::vector<El> fill(slots.size(), 0);
    while (true) {
      Rows rows(r, Vec(c, 0));
      for (int i = 0; i < r; ++i) rows[i][pivots[i]] = 1;
      for (size_t k = 0; k < slots.size(); ++k)
        rows[slots[k].first][slots[k].second] = fill[k];
      if (is_stable(T, rows)) out.submodules.push_back(make_submodule(T, rows));
      size_t pos = 0;
      while (pos < fill.size() && fill[pos] == q - 1) fill[pos++] = 0;
      if (pos == fill.size()) break;
      ++fill[pos];
    }
  }
  return out;
}

std::vector<GammaSemimodule> enumerate_semimodules(const BranchSemigroup& s,
                                                   const Budget& budget) {
  if (s.delta > budget.max_semimodule_delta)
    throw Error(ErrorCode::BudgetExceeded,
                "delta " + std::to_string(s.delta) +
                    " exceeds the semimodule enumeration cap");
  std::vector<GammaSemimodule> out;
  const int n = static_cast<int>(s.gaps.size());
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<long> S;
    for (int i = 0; i < n; ++i)
      if (mask & (1L << i)) S.push_back(s.gaps[i]);
    auto in_delta = [&](long a) {
      return s.contains(a) || std::binary_search(S.begin(), S.end(), a);
    };
    bool closed = true;
    for (long a : S)
      for (long beta : s.generators)
        if (!in_delta(a + beta)) closed = false;
    if (closed) out.push_back({std::move(S)});
  }
  return out;
}

long count_points(const BranchSemigroup& s, const FiniteField& F,
                  const Budget& budget) {
  TruncatedModule T = build_truncated_module(s, F, budget);
  return static_cast<long>(enumerate_stable_submodules(T).submodules.size());
}

namespace {

// q = p^k decomposition.
std::pair<long, int> prime_power(long q) {
  for (long p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    long rest = q;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1)
      throw Error(ErrorCode::UnsupportedField,
                  std::to_string(q) + " is not a prime power");
    return {p, k};
  }
  throw Error(ErrorCode::UnsupportedField, "q < 2");
}

std::vector<Rational> lagrange_fit(const std::vector<std::pair<long, long>>& pts) {
  const size_t n = pts.size();
  std::vector<Rational> poly(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // basis *= (x - x_j)
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * pts[j].first;
      }
      basis = std::move(next);
      denom *= Rational(pts[i].first - pts[j].first);
    }
    Rational scale = Rational(pts[i].second) / denom;
    for (size_t d = 0; d < basis.size(); ++d) poly[d] += basis[d] * scale;
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

Rational eval_poly(const std::vector<Rational>& poly, long x) {
  Rational acc(0);
  for (size_t d = poly.size(); d-- > 0;) acc = acc * x + poly[d];
  return acc;
}

}  // namespace

PuritySignature purity_signature(const BranchSemigroup& s,
                                 const std::vector<long>& qs_in,
                                 const Budget& budget, int threads) {
  std::vector<long> qs = qs_in;
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
    throw Error(ErrorCode::InsufficientFields, "q values must be distinct");
  if (static_cast<long>(qs.size()) < s.delta + 1)
    throw Error(ErrorCode::InsufficientFields,
                "need at least delta+1 = " + std::to_string(s.delta + 1) +
                    " fields, got " + std::to_string(qs.size()));

  PuritySignature sig;
  std::vector<std::map<std::vector<long>, long>> strata_by_q(qs.size());
  std::vector<long> counts(qs.size(), 0);

  auto work = [&](size_t idx) {
    auto [p, k] = prime_power(qs[idx]);
    FiniteField F(p, k);
    TruncatedModule T = build_truncated_module(s, F, budget);
    StableSubmoduleSet set = enumerate_stable_submodules(T);
    counts[idx] = static_cast<long>(set.submodules.size());
    for (const StableSubmodule& m : set.submodules) {
      std::vector<long> S;
      for (long v : m.value_set)
        if (!s.contains(v)) S.push_back(v);
      ++strata_by_q[idx][S];
    }
  };
  if (threads <= 1) {
    for (size_t i = 0; i < qs.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < qs.size(); i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }

  for (size_t i = 0; i < qs.size(); ++i) sig.counts[qs[i]] = counts[i];

  // Interpolate on the delta+1 largest q so any smaller q acts as an
  // out-of-sample check.
  std::vector<std::pair<long, long>> nodes;
  for (size_t i = qs.size() - (s.delta + 1); i < qs.size(); ++i)
    nodes.push_back({qs[i], counts[i]});
  sig.polynomial = lagrange_fit(nodes);

  std::vector<long> mismatched;
  for (size_t i = 0; i < qs.size(); ++i)
    if (eval_poly(sig.polynomial, qs[i]) != counts[i]) mismatched.push_back(qs[i]);
  if (!mismatched.empty()) {
    if (mismatched.size() == 1 && mismatched[0] == 2) {
      sig.flags.q2_deviation = true;
      sig.flags.out_of_sample_consistent = false;
    } else {
      throw Error(ErrorCode::InterpolationMismatch,
                  "count at q = " + std::to_string(mismatched[0]) +
                      " does not match the fitted polynomial");
    }
  }

  sig.flags.integer_coefficients = true;
  sig.flags.nonnegative_coefficients = true;
  for (const Rational& cfe : sig.polynomial) {
    if (boost::multiprecision::denominator(cfe) != 1)
      sig.flags.integer_coefficients = false;
    if (cfe < 0) sig.flags.nonnegative_coefficients = false;
  }
  sig.flags.monic_of_degree_delta =
      static_cast<long>(sig.polynomial.size()) == s.delta + 1 &&
      sig.polynomial.back() == 1;

  std::vector<GammaSemimodule> semimodules = enumerate_semimodules(s, budget);
  sig.semimodule_count = static_cast<long>(semimodules.size());
  sig.flags.value_at_one_matches_semimodules =
      eval_poly(sig.polynomial, 1) == sig.semimodule_count;

  // Strata: same value sets for every q, each count an exact power of q with a
  // q-independent exponent.
  std::set<std::vector<long>> all_S;
  for (const auto& m : strata_by_q)
    for (const auto& [S, cnt] : m) all_S.insert(S);
  sig.flags.strata_powers_of_q = true;
  for (const auto& S : all_S) {
    StratumRecord rec;
    rec.added_gaps = S;
    rec.power_of_q = true;
    for (size_t i = 0; i < qs.size(); ++i) {
      auto it = strata_by_q[i].find(S);
      long cnt = (it == strata_by_q[i].end()) ? 0 : it->second;
      rec.count_by_q[qs[i]] = cnt;
      long e = 0, v = cnt;
      while (v > 1 && v % qs[i] == 0) {
        v /= qs[i];
        ++e;
      }
      bool power = (cnt >= 1 && v == 1);
      if (!power || (rec.exponent >= 0 && rec.exponent != e)) rec.power_of_q = false;
      if (rec.exponent < 0) rec.exponent = e;
    }
    if (!rec.power_of_q) sig.flags.strata_powers_of_q = false;
    sig.strata.push_back(std::move(rec));
  }
  return sig;
}

}  // namespace branchforge
