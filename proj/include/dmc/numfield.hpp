#pragma once

#include "dmc/ratfun.hpp"
#include "dmc/scalar.hpp"

#include <memory>

namespace dmc {

// Q[x]/(m) for an irreducible monic m over Q. A null context means Q itself.
struct NFCtx {
  QPoly minpoly; // monic, irreducible over Q, degree >= 2
  int deg() const { return minpoly.deg(); }
};

using NFCtxPtr = std::shared_ptr<const NFCtx>;

class NFElem {
public:
  NFElem() : c_{Rat(0)} {}
  NFElem(long v) : c_{Rat(v)} {}
  NFElem(const Rat& v) : c_{v} {}
  NFElem(NFCtxPtr ctx, std::vector<Rat> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    reduce();
  }
  static NFElem generator(NFCtxPtr ctx) {
    return NFElem(std::move(ctx), {Rat(0), Rat(1)});
  }

  const NFCtxPtr& ctx() const { return ctx_; }
  bool rational() const { return !ctx_ || c_.size() <= 1; }
  // degree-0 contents (valid when rational())
  Rat rat_value() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) throw std::domain_error("NFElem: not rational");
    return c_.empty() ? Rat(0) : c_[0];
  }
  Rat coeff(int i) const { return i < (int)c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator-() const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;
  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }
  bool is_zero() const;

  std::string str() const;

private:
  NFCtxPtr ctx_; // null = Q
  std::vector<Rat> c_;
  void reduce();
  static NFCtxPtr merge(const NFCtxPtr& a, const NFCtxPtr& b);
};

template <>
struct FieldOps<NFElem> {
  static NFElem zero() { return NFElem(); }
  static NFElem one() { return NFElem(1); }
  static NFElem from_rat(const Rat& r) { return NFElem(r); }
  static bool is_zero(const NFElem& x) { return x.is_zero(); }
  static std::string str(const NFElem& x) { return x.str(); }
};

using NPoly = TPoly<NFElem>;
using NRatFn = RatFn<NFElem>;

inline NRatFn lift_ratfn(const QRatFn& f) {
  auto lift = [](const QPoly& p) {
    std::vector<NFElem> c;
    for (int i = 0; i <= p.deg(); ++i) c.emplace_back(p.coeff(i));
    return NPoly(std::move(c));
  };
  return NRatFn(lift(f.num()), lift(f.den()));
}

} // namespace dmc
