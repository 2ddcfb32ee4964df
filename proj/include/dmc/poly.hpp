#pragma once

#include "dmc/fq.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dmc {

// Element of A = F_q[T]. Coefficients low-to-high, F_q elements encoded as
// integers (see FqField). Invariant: no trailing zero coefficients.
class PolyA {
public:
  PolyA() = default;
  explicit PolyA(FqPtr F) : F_(std::move(F)) {}
  PolyA(FqPtr F, std::vector<int> coeffs);

  static PolyA zero(FqPtr F) { return PolyA(std::move(F)); }
  static PolyA one(FqPtr F) { return constant(std::move(F), 1); }
  static PolyA constant(FqPtr F, int c);
  static PolyA T(FqPtr F) { return PolyA(std::move(F), {0, 1}); }
  // c * T^k
  static PolyA monomial(FqPtr F, int c, int k);

  const FqPtr& field() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // deg(0) = -1 by convention here; callers guard the zero case.
  int deg() const { return (int)c_.size() - 1; }
  int coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : 0; }
  const std::vector<int>& coeffs() const { return c_; }
  int lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return lead() == 1; }

  PolyA operator+(const PolyA& o) const;
  PolyA operator-(const PolyA& o) const;
  PolyA operator-() const;
  PolyA operator*(const PolyA& o) const;
  bool operator==(const PolyA& o) const { return c_ == o.c_; }
  bool operator!=(const PolyA& o) const { return c_ != o.c_; }

  PolyA scaled(int c) const; // multiply by the F_q element c
  PolyA monic() const;       // scale so the leading coefficient is 1

  // Euclidean division: *this = q*b + r with deg r < deg b.
  std::pair<PolyA, PolyA> divmod(const PolyA& b) const;
  PolyA operator/(const PolyA& b) const { return divmod(b).first; }
  PolyA operator%(const PolyA& b) const { return divmod(b).second; }
  bool divides(const PolyA& a) const { return (a % *this).is_zero(); }

  int evaluate(int x) const; // value at x in F_q

  // Canonical order: by degree, then coefficient tuple high-to-low.
  bool operator<(const PolyA& o) const;

  std::string str() const;                        // "T^2+T+1"
  static PolyA parse(FqPtr F, const std::string&); // accepts * for scalars

private:
  FqPtr F_;
  std::vector<int> c_;
  void trim();
};

PolyA gcd(const PolyA& a, const PolyA& b); // monic (or zero)
PolyA lcm(const PolyA& a, const PolyA& b); // monic (or zero)
// g = gcd(a,b) = x*a + y*b
PolyA ext_gcd(const PolyA& a, const PolyA& b, PolyA& x, PolyA& y);

// q^deg a; errors on zero.
long poly_norm(const PolyA& a);

// Monic irreducibles of degree exactly d, in canonical order.
const std::vector<PolyA>& irreducibles(const FqPtr& F, int d);
// All monic polynomials of degree exactly d, canonical order.
std::vector<PolyA> monic_of_degree(const FqPtr& F, int d);

bool is_irreducible(const PolyA& a);

// Prime factorization of a monic polynomial (trial division).
// Result sorted canonically, with multiplicity.
std::vector<std::pair<PolyA, int>> factor(const PolyA& a);

bool is_squarefree(const PolyA& a);

// Moebius function of A; input must be monic.
int moebius(const PolyA& a);

// #(A/m)^* for monic m.
long euler_phi(const PolyA& m);

// All monic divisors of a monic square-free polynomial, canonical order.
std::vector<PolyA> monic_divisors(const PolyA& a);

struct GcdLcm { PolyA g, l; };
GcdLcm gcd_lcm(const PolyA& a, const PolyA& b);

std::string poly_json(const PolyA& a);

} // namespace dmc
