#include "dmc/laurent.hpp"

#include <sstream>

namespace dmc {

void LaurentK::trim() {
  size_t a = 0, b = c_.size();
  while (a < b && c_[a] == 0) ++a;
  while (b > a && c_[b - 1] == 0) --b;
  if (a == b) { c_.clear(); lo_ = 0; return; }
  if (a > 0 || b < c_.size()) {
    std::vector<int> nc(c_.begin() + a, c_.begin() + b);
    lo_ += (int)a;
    c_ = std::move(nc);
  }
  // coefficients at/after prec are meaningless; drop them
  if (!exact() && lo_ + (int)c_.size() > prec_) {
    if (lo_ >= prec_) { c_.clear(); lo_ = 0; return; }
    c_.resize(prec_ - lo_);
    trim();
  }
}

LaurentK LaurentK::term(FqPtr F, int c, int e) {
  LaurentK r(F);
  if (c != 0) { r.lo_ = e; r.c_ = {c}; }
  return r;
}

LaurentK LaurentK::from_poly(const PolyA& a) {
  LaurentK r(a.field());
  if (a.is_zero()) return r;
  // T^i = pi^{-i}: coefficient of pi^{-i} is a.coeff(i)
  r.lo_ = -a.deg();
  r.c_.assign(a.deg() + 1, 0);
  for (int i = 0; i <= a.deg(); ++i) r.c_[a.deg() - i] = a.coeff(i);
  r.trim();
  return r;
}

int LaurentK::coeff(int e) const {
  if (e >= prec_) throw std::runtime_error("LaurentK: coefficient beyond precision");
  if (e < lo_ || e >= hi()) return 0;
  return c_[e - lo_];
}

int LaurentK::ord() const {
  if (!c_.empty()) return lo_;
  if (exact()) throw std::domain_error("LaurentK: ord of exact zero");
  throw std::runtime_error("LaurentK: ord undecidable at current precision");
}

LaurentK LaurentK::operator+(const LaurentK& o) const {
  LaurentK r(F_ ? F_ : o.F_);
  r.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return r;
  int nlo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
  int nhi = std::max(c_.empty() ? nlo : hi(), o.c_.empty() ? nlo : o.hi());
  if (!r.exact()) nhi = std::min(nhi, r.prec_);
  r.lo_ = nlo;
  r.c_.assign(std::max(0, nhi - nlo), 0);
  for (int e = nlo; e < nhi; ++e) {
    int a = (e >= lo_ && e < hi()) ? c_[e - lo_] : 0;
    int b = (e >= o.lo_ && e < o.hi()) ? o.c_[e - o.lo_] : 0;
    r.c_[e - nlo] = r.F_->add(a, b);
  }
  r.trim();
  return r;
}

LaurentK LaurentK::operator-() const {
  LaurentK r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

LaurentK LaurentK::operator-(const LaurentK& o) const { return *this + (-o); }

LaurentK LaurentK::operator*(const LaurentK& o) const {
  LaurentK r(F_ ? F_ : o.F_);
  // precision of a product: min(ord(a)+prec(b), ord(b)+prec(a))
  long p = EXACT;
  if (!o.exact()) p = std::min<long>(p, (c_.empty() ? (long)prec_ : lo_) + (long)o.prec_);
  if (!exact()) p = std::min<long>(p, (o.c_.empty() ? (long)o.prec_ : o.lo_) + (long)prec_);
  r.prec_ = (int)std::min<long>(p, EXACT);
  if (c_.empty() || o.c_.empty()) return r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.F_->add(r.c_[i + j], r.F_->mul(c_[i], o.c_[j]));
  r.trim();
  return r;
}

LaurentK LaurentK::scaled(int c) const {
  LaurentK r = *this;
  if (c == 0) { r.c_.clear(); r.lo_ = 0; return r; }
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

bool LaurentK::operator==(const LaurentK& o) const {
  return lo_ == o.lo_ && c_ == o.c_ && prec_ == o.prec_;
}

LaurentK LaurentK::truncated_below(int e) const {
  LaurentK r = *this;
  r.prec_ = EXACT; // reduction mod pi^e is exact once coefficients < e are known
  if (!exact() && prec_ < e)
    throw std::runtime_error("LaurentK: truncation needs unknown coefficients");
  if (!r.c_.empty()) {
    int keep = e - r.lo_;
    if (keep <= 0) { r.c_.clear(); r.lo_ = 0; }
    else if (keep < (int)r.c_.size()) r.c_.resize(keep);
  }
  r.trim();
  return r;
}

PolyA LaurentK::poly_part() const {
  if (!exact() && prec_ < 1)
    throw std::runtime_error("LaurentK: poly part needs coefficients below 1");
  std::vector<int> cs; // cs[i] = coefficient of T^i = pi^{-i}
  for (int e = 0; e >= lo_; --e) {
    int v = (e >= lo_ && e < hi()) ? c_[e - lo_] : 0;
    cs.push_back(v);
  }
  return PolyA(F_, cs);
}

LaurentK LaurentK::frac_part() const {
  LaurentK r = *this;
  if (!r.c_.empty() && r.lo_ < 1) {
    int drop = 1 - r.lo_;
    if (drop >= (int)r.c_.size()) { r.c_.clear(); r.lo_ = 0; }
    else {
      r.c_.erase(r.c_.begin(), r.c_.begin() + drop);
      r.lo_ = 1;
    }
  }
  r.trim();
  return r;
}

std::string LaurentK::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    int e = lo_ + (int)i;
    if (e == 0 || c_[i] != 1) os << c_[i];
    if (e != 0 && c_[i] != 1) os << "*";
    if (e != 0) os << "pi^" << e;
  }
  if (first) os << "0";
  if (!exact()) os << " + O(pi^" << prec_ << ")";
  return os.str();
}

LaurentK embed_K(const PolyA& a, const PolyA& b, int precision) {
  if (b.is_zero()) throw std::domain_error("embed_K: division by zero");
  FqPtr F = b.field();
  LaurentK r(F, precision);
  if (a.is_zero()) { r.prec_ = LaurentK::EXACT; return r; }
  int ord = b.deg() - a.deg();
  if (ord >= precision) return r; // nothing known... but series is O(pi^prec)
  // long division of a by b in descending powers of T
  // a/b = sum_{e >= ord} c_e pi^e ; compute c_e for e in [ord, precision)
  r.lo_ = ord;
  r.c_.assign(precision - ord, 0);
  // rem tracks a - b * (partial quotient), as a Laurent polynomial in T
  // with bounded support; use coefficient map on T-exponent.
  // deg-based: c_e corresponds to quotient coefficient of T^{-e}
  std::vector<int> rem(a.coeffs()); // rem in T-coords, may gain negative T-powers
  int rem_shift = 0;                // rem stored for T-exponents >= -rem_shift
  int binv = F->inv(b.lead());
  for (int e = ord; e < precision; ++e) {
    // current leading T-exponent of interest: deg b - e
    int texp = b.deg() - e;
    int idx = texp + rem_shift;
    int c = (idx >= 0 && idx < (int)rem.size()) ? rem[idx] : 0;
    int ce = F->mul(c, binv);
    r.c_[e - ord] = ce;
    if (ce != 0) {
      // rem -= ce * T^{-e} * b ; support of that term: T-exponents [-e, deg b - e]
      int need = e; // lowest T-exponent = -e
      if (need > rem_shift) {
        rem.insert(rem.begin(), need - rem_shift, 0);
        rem_shift = need;
      }
      for (int i = 0; i <= b.deg(); ++i) {
        int ti = i - e + rem_shift;
        rem[ti] = F->sub(rem[ti], F->mul(ce, b.coeff(i)));
      }
    }
  }
  bool done = true;
  for (int x : rem)
    if (x != 0) { done = false; break; }
  if (done) r.prec_ = LaurentK::EXACT; // division terminated: value is a Laurent polynomial
  r.trim();
  return r;
}

} // namespace dmc
