#pragma once

#include <cstdint>
#include <vector>

#include "branchforge/common.hpp"

namespace branchforge {

// Exact arithmetic in GF(p^k), q <= 64, via full lookup tables.  Elements are
// indices 0..q-1; for k > 1 an element encodes a polynomial over F_p in base-p
// digits, reduced modulo a stored irreducible modulus.
class FiniteField {
 public:
  using El = uint8_t;

  explicit FiniteField(long p, int k = 1);

  long p() const { return p_; }
  int k() const { return k_; }
  long q() const { return q_; }
  const std::vector<long>& modulus() const { return modulus_; }

  El add(El a, El b) const { return add_[a * q_ + b]; }
  El sub(El a, El b) const { return add_[a * q_ + neg_[b]]; }
  El mul(El a, El b) const { return mul_[a * q_ + b]; }
  El neg(El a) const { return neg_[a]; }
  El inv(El a) const;
  El from_int(long n) const;

 private:
  long p_;
  int k_;
  long q_;
  std::vector<long> modulus_;  // coefficients, degree k, monic
  std::vector<El> add_, mul_, neg_, inv_;
};

}  // namespace branchforge
