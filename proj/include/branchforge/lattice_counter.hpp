#pragma once

#include <map>
#include <vector>

#include "branchforge/common.hpp"
#include "branchforge/finite_field.hpp"
#include "branchforge/semigroup.hpp"

namespace branchforge {

struct Budget {
  long max_q = 11;
  long max_c = 16;
  long max_delta = 8;             // submodule enumeration cap
  long max_semimodule_delta = 20; // 2^delta subset scan cap
};

// k[[t]]/t^c as F_q^c with basis 1, t, ..., t^{c-1}, together with the shift
// matrices of multiplication by t^{beta_i}.
struct TruncatedModule {
  BranchSemigroup semigroup;
  const FiniteField* field = nullptr;
  long c = 0;
  std::vector<std::vector<std::vector<FiniteField::El>>> multipliers;
};

// R-stable subspace in canonical (reduced row echelon) form.  These are in
// bijection with the index-0 gamma-stable lattices: every fractional R-ideal
// has a unique 0-normalization M0 inside k[[t]] containing t^c k[[t]], and
// exactly one shift t^{-a} M0 has index 0 (a = colength(M0) - delta), so the
// enumeration below computes |X_gamma^0(F_q)|.
struct StableSubmodule {
  std::vector<std::vector<FiniteField::El>> basis;  // RREF rows
  std::vector<long> value_set;                      // pivot valuations < c
  int dimension = 0;
};

struct StableSubmoduleSet {
  std::vector<StableSubmodule> submodules;
};

// Gamma-semimodule Delta = Gamma union S, S a subset of the gaps.
struct GammaSemimodule {
  std::vector<long> added_gaps;  // S, sorted
};

struct StratumRecord {
  std::vector<long> added_gaps;     // S identifying the stratum
  std::map<long, long> count_by_q;
  long exponent = -1;               // d with count = q^d, -1 if not a power
  bool power_of_q = false;
};

struct PuritySignature {
  std::map<long, long> counts;          // q -> |X^0(F_q)|
  std::vector<Rational> polynomial;     // c_0 + c_1 q + ... + c_delta q^delta
  std::vector<StratumRecord> strata;
  long semimodule_count = 0;
  struct Flags {
    bool integer_coefficients = false;
    bool nonnegative_coefficients = false;
    bool monic_of_degree_delta = false;
    bool value_at_one_matches_semimodules = false;
    bool strata_powers_of_q = false;
    bool out_of_sample_consistent = true;
    bool q2_deviation = false;
  } flags;
  bool pass() const;
};

TruncatedModule build_truncated_module(const BranchSemigroup& s,
                                       const FiniteField& F,
                                       const Budget& budget = {});
StableSubmoduleSet enumerate_stable_submodules(const TruncatedModule& T);
// All-subspace filter; the independent oracle for small q^c.
StableSubmoduleSet enumerate_stable_submodules_naive(const TruncatedModule& T);
std::vector<GammaSemimodule> enumerate_semimodules(const BranchSemigroup& s,
                                                   const Budget& budget = {});
long count_points(const BranchSemigroup& s, const FiniteField& F,
                  const Budget& budget = {});
PuritySignature purity_signature(const BranchSemigroup& s,
                                 const std::vector<long>& qs,
                                 const Budget& budget = {}, int threads = 1);

}  // namespace branchforge
