#pragma once

#include "dmc/poly.hpp"

#include <climits>

namespace dmc {

// Truncated Laurent series in pi = T^{-1} over F_q. Stored window
// [lo, lo+size) of coefficients; coefficients at exponents in
// [lo+size, prec) are known to be zero; exponents >= prec are unknown.
// prec == EXACT means the value is a Laurent polynomial (all higher
// coefficients exactly zero). Any operation that would need unknown
// coefficients throws.
class LaurentK {
public:
  static constexpr int EXACT = INT_MAX;

  LaurentK() = default;
  explicit LaurentK(FqPtr F, int prec = EXACT) : F_(std::move(F)), prec_(prec) {}
  // value c * pi^e
  static LaurentK term(FqPtr F, int c, int e);
  // embed a polynomial a(T): exponents -deg(a)..0
  static LaurentK from_poly(const PolyA& a);

  const FqPtr& field() const { return F_; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ == EXACT; }

  // True when every known coefficient is zero. For exact values this means
  // the value is 0; otherwise it only says ord >= prec.
  bool known_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && exact(); }

  int coeff(int e) const; // throws if e >= prec
  // Valuation ord_infty; throws if undecidable at this precision.
  int ord() const;
  // |x| = q^{-ord}; 0 for exact zero.

  LaurentK operator+(const LaurentK& o) const;
  LaurentK operator-(const LaurentK& o) const;
  LaurentK operator-() const;
  LaurentK operator*(const LaurentK& o) const;
  LaurentK scaled(int c) const;
  bool operator==(const LaurentK& o) const;

  // Drop all coefficients at exponents >= e (reduction mod pi^e O_infty).
  LaurentK truncated_below(int e) const;
  // Keep exponents <= 0 as a polynomial in T (the "integral part" in A).
  PolyA poly_part() const;
  // Keep exponents >= 1 (the fractional part); exact iff input exact.
  LaurentK frac_part() const;

  // Window accessors for linear algebra over coefficients.
  int lo() const { return lo_; }
  int hi() const { return lo_ + (int)c_.size(); } // first exponent past window

  std::string str() const;

private:
  FqPtr F_;
  int lo_ = 0;
  std::vector<int> c_; // c_[i] = coefficient of pi^(lo_+i)
  int prec_ = EXACT;
  void trim();
  friend LaurentK embed_K(const PolyA&, const PolyA&, int);
};

// Laurent expansion of a/b at infinity, coefficients known below `precision`.
// ord = deg b - deg a. Errors on b == 0.
LaurentK embed_K(const PolyA& a, const PolyA& b, int precision);

} // namespace dmc
