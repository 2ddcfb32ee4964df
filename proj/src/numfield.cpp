#include "dmc/numfield.hpp"

#include <sstream>

namespace dmc {

namespace {

// polynomial arithmetic on rational coefficient vectors (low-to-high)
std::vector<Rat> pmulmod(const std::vector<Rat>& a, const std::vector<Rat>& b,
                         const QPoly& m) {
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  // reduce mod monic m
  int n = m.deg();
  for (int d = (int)r.size() - 1; d >= n; --d) {
    Rat c = r[d];
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) r[d - n + i] -= c * m.coeff(i);
  }
  r.resize(std::max<size_t>(1, n));
  return r;
}

} // namespace

void NFElem::reduce() {
  if (ctx_) {
    int n = ctx_->deg();
    if ((int)c_.size() > n) {
      for (int d = (int)c_.size() - 1; d >= n; --d) {
        Rat c = c_[d];
        if (c == 0) continue;
        for (int i = 0; i <= n; ++i) c_[d - n + i] -= c * ctx_->minpoly.coeff(i);
      }
      c_.resize(n);
    }
  }
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  if (c_.empty()) c_ = {Rat(0)};
  if (c_.size() == 1) ctx_.reset(); // rational values carry no context
}

NFCtxPtr NFElem::merge(const NFCtxPtr& a, const NFCtxPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->minpoly == b->minpoly) return a;
  throw std::domain_error("NFElem: elements of different number fields");
}

NFElem NFElem::operator+(const NFElem& o) const {
  NFElem r;
  r.ctx_ = merge(ctx_, o.ctx_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.reduce();
  return r;
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator*(const NFElem& o) const {
  NFElem r;
  r.ctx_ = merge(ctx_, o.ctx_);
  if (r.ctx_)
    r.c_ = pmulmod(c_, o.c_, r.ctx_->minpoly);
  else
    r.c_ = {c_[0] * o.c_[0]};
  r.reduce();
  return r;
}

NFElem NFElem::operator/(const NFElem& o) const {
  if (o.is_zero()) throw std::domain_error("NFElem: division by zero");
  NFCtxPtr ctx = merge(ctx_, o.ctx_);
  if (!ctx || o.rational()) {
    Rat d = o.rational() ? o.rat_value() : Rat(0);
    if (!o.rational()) {
      // fall through to the inverse computation
    } else {
      NFElem r = *this;
      for (auto& x : r.c_) x /= d;
      r.reduce();
      return r;
    }
  }
  // invert o via extended gcd of its polynomial against the minimal polynomial
  QPoly op{std::vector<Rat>(o.c_)};
  QPoly m = ctx->minpoly;
  // ext gcd over Q[x]
  QPoly r0 = m, r1 = op, t0, t1 = QPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPoly nt = t0 - q * t1;
    r0 = r1;
    r1 = r;
    t0 = t1;
    t1 = nt;
  }
  if (r0.deg() != 0) throw std::domain_error("NFElem: non-invertible (reducible modulus?)");
  QPoly inv = t0.scaled(Rat(1) / r0.coeff(0));
  std::vector<Rat> ic;
  for (int i = 0; i <= inv.deg(); ++i) ic.push_back(inv.coeff(i));
  NFElem oi(ctx, std::move(ic));
  return *this * oi;
}

bool NFElem::operator==(const NFElem& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = 0; i < n; ++i) {
    Rat a = i < c_.size() ? c_[i] : Rat(0);
    Rat b = i < o.c_.size() ? o.c_[i] : Rat(0);
    if (a != b) return false;
  }
  return true;
}

bool NFElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::string NFElem::str() const {
  if (rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i >= 1) os << "*a";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

} // namespace dmc
