#include "branchforge/finite_field.hpp"

#include <string>

namespace branchforge {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Modulus table for the prime powers p^k <= 64; coefficients low to high.
std::vector<long> modulus_for(long p, int k) {
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
  if (p == 2 && k == 5) return {1, 0, 1, 0, 0, 1};
  if (p == 2 && k == 6) return {1, 1, 0, 1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 3 && k == 3) return {1, 2, 0, 1};
  if (p == 5 && k == 2) return {2, 0, 1};
  if (p == 7 && k == 2) return {1, 0, 1};
  throw Error(ErrorCode::UnsupportedField,
              "no modulus stored for p=" + std::to_string(p) +
                  ", k=" + std::to_string(k));
}

std::vector<long> decode(long idx, long p, int k) {
  std::vector<long> digits(k, 0);
  for (int i = 0; i < k; ++i) {
    digits[i] = idx % p;
    idx /= p;
  }
  return digits;
}

long encode(const std::vector<long>& digits, long p, int k) {
  long idx = 0;
  for (int i = k - 1; i >= 0; --i) idx = idx * p + digits[i];
  return idx;
}

// Polynomial product modulo the modulus, coefficients mod p.
long poly_mul(long a, long b, long p, int k, const std::vector<long>& mod) {
  std::vector<long> da = decode(a, p, k), db = decode(b, p, k);
  std::vector<long> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int d = 2 * k - 2; d >= k; --d) {
    long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p * p) % p;
  }
  prod.resize(k);
  return encode(prod, p, k);
}

}  // namespace

FiniteField::FiniteField(long p, int k) : p_(p), k_(k) {
  if (!is_prime(p))
    throw Error(ErrorCode::UnsupportedField,
                std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::UnsupportedField, "extension degree < 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > 64) throw Error(ErrorCode::UnsupportedField, "q > 64 unsupported");
  }
  if (k > 1) {
    modulus_ = modulus_for(p, k);
    modulus_.push_back(1);  // monic head
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (long a = 0; a < q_; ++a) {
    std::vector<long> da = decode(a, p, k);
    for (auto& d : da) d = (p - d) % p;
    neg_[a] = static_cast<El>(encode(da, p, k));
    for (long b = 0; b < q_; ++b) {
      std::vector<long> s = decode(a, p, k), db = decode(b, p, k);
      for (int i = 0; i < k; ++i) s[i] = (s[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<El>(encode(s, p, k));
      mul_[a * q_ + b] =
          (k == 1) ? static_cast<El>((a * b) % p)
                   : static_cast<El>(poly_mul(a, b, p, k, modulus_));
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<El>(b);
  // A zero divisor (inv not found) means the modulus is reducible.
  for (long a = 1; a < q_; ++a)
    if (inv_[a] == 0)
      throw Error(ErrorCode::UnsupportedField, "modulus is not irreducible");
}

FiniteField::El FiniteField::inv(El a) const {
  if (a == 0) throw Error(ErrorCode::UnsupportedField, "inverse of zero");
  return inv_[a];
}

FiniteField::El FiniteField::from_int(long n) const {
  long r = ((n % p_) + p_) % p_;
  return static_cast<El>(r);
}

}  // namespace branchforge
