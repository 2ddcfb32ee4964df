#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmc {

// The finite field F_q, q = p^n, realized as F_p[x]/(m) where m is the
// lexicographically least monic irreducible of degree n over F_p
// (coefficients read low-to-high as a base-p integer). Elements are encoded
// as integers in [0, q): the base-p digits are the coordinates in the basis
// 1, x, ..., x^{n-1}.
class FqField {
public:
  FqField(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  long q() const { return q_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long e) const;

  // Trace to the prime field F_p, as an integer in [0, p).
  int trace(int a) const { return tr_[a]; }

  // Digits of the modulus polynomial, low-to-high, length n+1.
  const std::vector<int>& modulus() const { return irred_; }

  static std::shared_ptr<const FqField> get(long q);

private:
  int p_, n_;
  long q_;
  std::vector<int> irred_;
  std::vector<int> add_, mul_, neg_, inv_, tr_;
};

using FqPtr = std::shared_ptr<const FqField>;

bool is_prime_power(long q, int& p, int& n);

} // namespace dmc
