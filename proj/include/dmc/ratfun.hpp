#pragma once

#include "dmc/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dmc {

// Dense polynomial in t over an exact field K.
template <class K>
class TPoly {
public:
  TPoly() = default;
  TPoly(std::initializer_list<K> cs) : c_(cs) { trim(); }
  explicit TPoly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }
  static TPoly constant(const K& x) {
    TPoly r;
    if (!FieldOps<K>::is_zero(x)) r.c_ = {x};
    return r;
  }
  static TPoly monomial(const K& x, int k) {
    TPoly r;
    if (!FieldOps<K>::is_zero(x)) {
      r.c_.assign(k + 1, FieldOps<K>::zero());
      r.c_[k] = x;
    }
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  int deg() const { return (int)c_.size() - 1; }
  K coeff(int i) const {
    return (i >= 0 && i < (int)c_.size()) ? c_[i] : FieldOps<K>::zero();
  }
  const std::vector<K>& coeffs() const { return c_; }
  const K& lead() const { return c_.back(); }

  TPoly operator+(const TPoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), FieldOps<K>::zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff((int)i) + o.coeff((int)i);
    return TPoly(std::move(r));
  }
  TPoly operator-() const {
    TPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  TPoly operator-(const TPoly& o) const { return *this + (-o); }
  TPoly operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<K> r(c_.size() + o.c_.size() - 1, FieldOps<K>::zero());
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return TPoly(std::move(r));
  }
  TPoly scaled(const K& x) const {
    if (FieldOps<K>::is_zero(x)) return {};
    TPoly r = *this;
    for (auto& y : r.c_) y = y * x;
    return r;
  }
  bool operator==(const TPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

  std::pair<TPoly, TPoly> divmod(const TPoly& b) const {
    if (b.is_zero()) throw std::domain_error("TPoly: division by zero");
    TPoly q, r = *this;
    if (deg() < b.deg()) return {q, r};
    q.c_.assign(deg() - b.deg() + 1, FieldOps<K>::zero());
    K linv = FieldOps<K>::one() / b.lead();
    for (int d = r.deg(); d >= b.deg(); --d) {
      K c = r.coeff(d);
      if (FieldOps<K>::is_zero(c)) continue;
      K f = c * linv;
      q.c_[d - b.deg()] = f;
      for (int i = 0; i <= b.deg(); ++i)
        r.c_[d - b.deg() + i] = r.c_[d - b.deg() + i] - f * b.c_[i];
    }
    q.trim();
    r.trim();
    return {q, r};
  }
  TPoly operator/(const TPoly& b) const { return divmod(b).first; }
  TPoly operator%(const TPoly& b) const { return divmod(b).second; }

  K evaluate(const K& x) const {
    K v = FieldOps<K>::zero();
    for (int i = deg(); i >= 0; --i) v = v * x + c_[i];
    return v;
  }

  TPoly derivative() const {
    if (deg() < 1) return {};
    std::vector<K> r(deg(), FieldOps<K>::zero());
    for (int i = 1; i <= deg(); ++i) r[i - 1] = c_[i] * FieldOps<K>::from_rat(Rat(i));
    return TPoly(std::move(r));
  }

  // divide out (t - x) exactly; throws if x is not a root
  TPoly deflate(const K& x) const {
    auto [q, r] = divmod(TPoly{-x, FieldOps<K>::one()});
    if (!r.is_zero()) throw std::domain_error("TPoly: deflate at a non-root");
    return q;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
      if (FieldOps<K>::is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << FieldOps<K>::str(c_[i]) << ")";
      if (i >= 1) os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && FieldOps<K>::is_zero(c_.back())) c_.pop_back();
  }
};

template <class K>
TPoly<K> tpoly_gcd(TPoly<K> a, TPoly<K> b) {
  while (!b.is_zero()) {
    TPoly<K> r = a % b;
    a = b;
    b = r;
  }
  if (!a.is_zero()) a = a.scaled(FieldOps<K>::one() / a.lead());
  return a;
}

// Rational function in t over K, reduced, denominator monic.
template <class K>
class RatFn {
public:
  RatFn() : num_(), den_(TPoly<K>::constant(FieldOps<K>::one())) {}
  RatFn(TPoly<K> num, TPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
    reduce();
  }
  static RatFn from_poly(TPoly<K> p) {
    return RatFn(std::move(p), TPoly<K>::constant(FieldOps<K>::one()));
  }
  static RatFn constant(const K& x) { return from_poly(TPoly<K>::constant(x)); }
  static RatFn t_power(int k) { // t^k, k may be negative
    if (k >= 0) return from_poly(TPoly<K>::monomial(FieldOps<K>::one(), k));
    return RatFn(TPoly<K>::constant(FieldOps<K>::one()),
                 TPoly<K>::monomial(FieldOps<K>::one(), -k));
  }

  const TPoly<K>& num() const { return num_; }
  const TPoly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn operator+(const RatFn& o) const {
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFn operator-() const { return RatFn(-num_, den_); }
  RatFn operator-(const RatFn& o) const { return *this + (-o); }
  RatFn operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
  }
  RatFn operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::domain_error("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
  }
  RatFn scaled(const K& x) const { return RatFn(num_.scaled(x), den_); }
  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  bool has_pole_at(const K& x) const {
    return FieldOps<K>::is_zero(den_.evaluate(x));
  }

  // exact value at t = x; reduced form makes poles genuine
  K evaluate(const K& x) const {
    K d = den_.evaluate(x);
    if (FieldOps<K>::is_zero(d)) throw std::domain_error("RatFn: pole at evaluation point");
    return num_.evaluate(x) / d;
  }

  // Order of vanishing at t = x (negative for a pole).
  int order_at(const K& x) const {
    if (is_zero()) throw std::domain_error("RatFn: order of zero function");
    int o = 0;
    TPoly<K> n = num_;
    while (FieldOps<K>::is_zero(n.evaluate(x))) { n = n.deflate(x); ++o; }
    TPoly<K> d = den_;
    while (FieldOps<K>::is_zero(d.evaluate(x))) { d = d.deflate(x); --o; }
    return o;
  }

  // lim_{t->x} of this function; throws if a pole remains.
  K limit_at(const K& x) const {
    if (is_zero()) return FieldOps<K>::zero();
    TPoly<K> n = num_, d = den_;
    while (FieldOps<K>::is_zero(d.evaluate(x))) {
      if (!FieldOps<K>::is_zero(n.evaluate(x)))
        throw std::domain_error("RatFn: pole at limit point");
      n = n.deflate(x);
      d = d.deflate(x);
    }
    return n.evaluate(x) / d.evaluate(x);
  }

  // residue-like data: lim (t-x)^m * f at x where m = pole order (m>=0)
  K leading_at_pole(const K& x, int m) const {
    RatFn shift = *this;
    for (int i = 0; i < m; ++i)
      shift = shift * RatFn(TPoly<K>{-x, FieldOps<K>::one()},
                            TPoly<K>::constant(FieldOps<K>::one()));
    return shift.limit_at(x);
  }

  // substitute t -> c/t (exact); used for s -> 1-s with c = 1/q.
  RatFn subst_c_over_t(const K& c) const {
    auto sub = [&](const TPoly<K>& p) {
      // p(c/t) * t^{deg p} = sum p_i c^i t^{deg p - i}
      std::vector<K> r(p.deg() + 1, FieldOps<K>::zero());
      K ci = FieldOps<K>::one();
      for (int i = 0; i <= p.deg(); ++i) {
        r[p.deg() - i] = p.coeff(i) * ci;
        ci = ci * c;
      }
      return TPoly<K>(std::move(r));
    };
    if (is_zero()) return RatFn();
    int dn = num_.deg(), dd = den_.deg();
    TPoly<K> n = sub(num_), d = sub(den_);
    // f(c/t) = n(t) t^{-dn} / (d(t) t^{-dd}) = n t^{dd} / (d t^{dn}) ... choose shift
    if (dd >= dn) n = n * TPoly<K>::monomial(FieldOps<K>::one(), dd - dn);
    else d = d * TPoly<K>::monomial(FieldOps<K>::one(), dn - dd);
    return RatFn(std::move(n), std::move(d));
  }

  // power-series coefficients at t=0 up to and including t^N (den(0) != 0)
  std::vector<K> series(int N) const {
    if (FieldOps<K>::is_zero(den_.coeff(0)))
      throw std::domain_error("RatFn: series needs den(0) != 0");
    std::vector<K> out(N + 1, FieldOps<K>::zero());
    K d0inv = FieldOps<K>::one() / den_.coeff(0);
    for (int n = 0; n <= N; ++n) {
      K acc = num_.coeff(n);
      for (int j = 1; j <= std::min(n, den_.deg()); ++j)
        acc = acc - den_.coeff(j) * out[n - j];
      out[n] = acc * d0inv;
    }
    return out;
  }

  std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
  TPoly<K> num_, den_;
  void reduce() {
    if (num_.is_zero()) {
      den_ = TPoly<K>::constant(FieldOps<K>::one());
      return;
    }
    TPoly<K> g = tpoly_gcd(num_, den_);
    if (g.deg() > 0) { num_ = num_ / g; den_ = den_ / g; }
    K l = FieldOps<K>::one() / den_.lead();
    num_ = num_.scaled(l);
    den_ = den_.scaled(l);
  }
};

using QPoly = TPoly<Rat>;
using QRatFn = RatFn<Rat>;

// geometric tail  sum_{i>=0} r^i * head = head/(1-r)  with r a monomial c*t^k
template <class K>
RatFn<K> geometric(const RatFn<K>& head, const RatFn<K>& ratio) {
  return head / (RatFn<K>::constant(FieldOps<K>::one()) - ratio);
}

} // namespace dmc
