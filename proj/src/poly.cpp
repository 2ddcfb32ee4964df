#include "dmc/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace dmc {

PolyA::PolyA(FqPtr F, std::vector<int> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
  trim();
}

void PolyA::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyA PolyA::constant(FqPtr F, int c) {
  PolyA r(F);
  if (c % F->q() != 0) r.c_ = {c};
  return r;
}

PolyA PolyA::monomial(FqPtr F, int c, int k) {
  PolyA r(F);
  if (c != 0) {
    r.c_.assign(k + 1, 0);
    r.c_[k] = c;
  }
  return r;
}

PolyA PolyA::operator+(const PolyA& o) const {
  PolyA r(F_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->add(coeff((int)i), o.coeff((int)i));
  r.trim();
  return r;
}

PolyA PolyA::operator-() const {
  PolyA r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

PolyA PolyA::operator-(const PolyA& o) const { return *this + (-o); }

PolyA PolyA::operator*(const PolyA& o) const {
  PolyA r(F_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
  r.trim();
  return r;
}

PolyA PolyA::scaled(int c) const {
  PolyA r(F_);
  if (c == 0) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

PolyA PolyA::monic() const {
  if (is_zero()) return *this;
  return scaled(F_->inv(lead()));
}

std::pair<PolyA, PolyA> PolyA::divmod(const PolyA& b) const {
  if (b.is_zero()) throw std::domain_error("PolyA: division by zero");
  PolyA q(F_), r = *this;
  if (deg() < b.deg()) return {q, r};
  q.c_.assign(deg() - b.deg() + 1, 0);
  int linv = F_->inv(b.lead());
  for (int d = r.deg(); d >= b.deg(); --d) {
    int c = r.coeff(d);
    if (c == 0) continue;
    int f = F_->mul(c, linv);
    q.c_[d - b.deg()] = f;
    for (int i = 0; i <= b.deg(); ++i)
      r.c_[d - b.deg() + i] = F_->sub(r.c_[d - b.deg() + i], F_->mul(f, b.c_[i]));
  }
  q.trim();
  r.trim();
  return {q, r};
}

int PolyA::evaluate(int x) const {
  int v = 0;
  for (int i = deg(); i >= 0; --i) v = F_->add(F_->mul(v, x), c_[i]);
  return v;
}

bool PolyA::operator<(const PolyA& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (int i = deg(); i >= 0; --i)
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  return false;
}

std::string PolyA::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    int c = coeff(i);
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) { os << c; continue; }
    if (c != 1) os << c << "*";
    os << "T";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

PolyA PolyA::parse(FqPtr F, const std::string& s) {
  // terms separated by + or -, each  c | c*T^k | T^k | T | c*T
  PolyA r(F);
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
  while (i < s.size()) {
    skip_ws();
    long c = 1;
    int k = 0;
    bool saw = false;
    if (i < s.size() && isdigit((unsigned char)s[i])) {
      c = 0;
      while (i < s.size() && isdigit((unsigned char)s[i])) c = c * 10 + (s[i++] - '0');
      saw = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
    }
    if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
      ++i;
      k = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i; skip_ws();
        if (i >= s.size() || !isdigit((unsigned char)s[i]))
          throw std::invalid_argument("PolyA::parse: exponent expected in '" + s + "'");
        k = 0;
        while (i < s.size() && isdigit((unsigned char)s[i])) k = k * 10 + (s[i++] - '0');
      }
      saw = true;
    }
    if (!saw) throw std::invalid_argument("PolyA::parse: bad term in '" + s + "'");
    int cf = (int)(c % F->q());
    if (neg) cf = F->neg(cf);
    r = r + PolyA::monomial(F, cf, k);
    skip_ws();
    if (i == s.size()) break;
    if (s[i] == '+') { neg = false; ++i; }
    else if (s[i] == '-') { neg = true; ++i; }
    else if (s[i] == '(' || s[i] == ')' || s[i] == '*') {
      // product form like "T*(T+1)" : parse factors recursively
      // supported: sequence of parenthesized / plain factors joined by '*'
      break;
    } else {
      throw std::invalid_argument("PolyA::parse: unexpected '" + std::string(1, s[i]) + "'");
    }
  }
  if (i < s.size()) {
    // factor-product grammar: split on top-level '*' with parentheses
    // fall back: evaluate the whole string as a product of factors
    std::vector<std::string> factors;
    size_t j = 0;
    int depth = 0;
    std::string cur;
    for (; j < s.size(); ++j) {
      char ch = s[j];
      if (ch == '(') { if (depth++ > 0) cur += ch; continue; }
      if (ch == ')') { if (--depth > 0) cur += ch; continue; }
      if (ch == '*' && depth == 0) {
        // '*' between factors only when next char is '(' or prev was ')'
        bool factor_sep = (j + 1 < s.size() && s[j + 1] == '(') ||
                          (j > 0 && s[j - 1] == ')');
        if (factor_sep) { factors.push_back(cur); cur.clear(); continue; }
      }
      cur += ch;
    }
    factors.push_back(cur);
    if (factors.size() <= 1)
      throw std::invalid_argument("PolyA::parse: cannot parse '" + s + "'");
    PolyA prod = PolyA::one(F);
    for (auto& f : factors) prod = prod * PolyA::parse(F, f);
    return prod;
  }
  return r;
}

PolyA gcd(const PolyA& a, const PolyA& b) {
  PolyA x = a, y = b;
  while (!y.is_zero()) {
    PolyA r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

PolyA ext_gcd(const PolyA& a, const PolyA& b, PolyA& x, PolyA& y) {
  FqPtr F = a.field() ? a.field() : b.field();
  PolyA r0 = a, r1 = b;
  PolyA x0 = PolyA::one(F), x1 = PolyA::zero(F);
  PolyA y0 = PolyA::zero(F), y1 = PolyA::one(F);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1; r1 = r;
    PolyA nx = x0 - q * x1; x0 = x1; x1 = nx;
    PolyA ny = y0 - q * y1; y0 = y1; y1 = ny;
  }
  if (!r0.is_zero()) {
    int l = r0.lead();
    int li = F->inv(l);
    r0 = r0.scaled(li); x0 = x0.scaled(li); y0 = y0.scaled(li);
  }
  x = x0; y = y0;
  return r0;
}

PolyA lcm(const PolyA& a, const PolyA& b) {
  if (a.is_zero() || b.is_zero()) return PolyA::zero(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

GcdLcm gcd_lcm(const PolyA& a, const PolyA& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd_lcm(0,0)");
  return {gcd(a, b), lcm(a, b)};
}

long poly_norm(const PolyA& a) {
  if (a.is_zero()) throw std::domain_error("norm of zero");
  long r = 1;
  for (int i = 0; i < a.deg(); ++i) r *= a.field()->q();
  return r;
}

std::vector<PolyA> monic_of_degree(const FqPtr& F, int d) {
  std::vector<PolyA> out;
  long count = 1;
  for (int i = 0; i < d; ++i) count *= F->q();
  out.reserve(count);
  std::vector<int> c(d + 1, 0);
  c[d] = 1;
  for (long v = 0; v < count; ++v) {
    long t = v;
    for (int i = 0; i < d; ++i) { c[i] = (int)(t % F->q()); t /= F->q(); }
    out.emplace_back(F, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<PolyA>& irreducibles(const FqPtr& F, int d) {
  static std::map<std::pair<long, int>, std::vector<PolyA>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  // fill degrees 1..d in order; degree e only needs degrees <= e/2
  for (int e = 1; e <= d; ++e) {
    auto key = std::make_pair(F->q(), e);
    if (cache.count(key)) continue;
    std::vector<PolyA> out;
    for (const PolyA& m : monic_of_degree(F, e)) {
      bool irred = true;
      for (int f = 1; 2 * f <= e && irred; ++f)
        for (const PolyA& g : cache[std::make_pair(F->q(), f)])
          if (g.divides(m)) { irred = false; break; }
      if (irred) out.push_back(m);
    }
    cache[key] = std::move(out);
  }
  return cache[std::make_pair(F->q(), d)];
}

bool is_irreducible(const PolyA& a) {
  if (a.is_zero() || a.deg() == 0) return false;
  PolyA m = a.monic();
  for (int e = 1; 2 * e <= m.deg(); ++e)
    for (const PolyA& g : irreducibles(a.field(), e))
      if (g.divides(m)) return false;
  return true;
}

std::vector<std::pair<PolyA, int>> factor(const PolyA& a) {
  if (a.is_zero()) throw std::domain_error("factor of zero");
  if (!a.is_monic()) throw std::domain_error("factor: input must be monic");
  std::vector<std::pair<PolyA, int>> out;
  PolyA rest = a;
  for (int d = 1; rest.deg() > 0 && d <= rest.deg(); ++d) {
    if (2 * d > rest.deg()) {
      // remainder is irreducible
      out.emplace_back(rest, 1);
      rest = PolyA::one(a.field());
      break;
    }
    for (const PolyA& p : irreducibles(a.field(), d)) {
      int mult = 0;
      while (p.divides(rest)) { rest = rest / p; ++mult; }
      if (mult) out.emplace_back(p, mult);
      if (rest.deg() == 0) break;
    }
  }
  if (rest.deg() > 0) out.emplace_back(rest, 1);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

bool is_squarefree(const PolyA& a) {
  for (const auto& [p, m] : factor(a.monic()))
    if (m > 1) return false;
  return true;
}

int moebius(const PolyA& a) {
  if (!a.is_monic()) throw std::domain_error("moebius: input must be monic");
  auto f = factor(a);
  int r = 1;
  for (const auto& [p, m] : f) {
    if (m > 1) return 0;
    r = -r;
  }
  return r;
}

long euler_phi(const PolyA& m) {
  long r = poly_norm(m);
  for (const auto& [p, e] : factor(m)) r -= r / poly_norm(p);
  return r;
}

std::vector<PolyA> monic_divisors(const PolyA& a) {
  if (!a.is_monic() && !a.is_one())
    throw std::domain_error("monic_divisors: input must be monic");
  if (!is_squarefree(a))
    throw std::domain_error("monic_divisors: input must be square-free");
  std::vector<PolyA> out{PolyA::one(a.field())};
  for (const auto& [p, m] : factor(a)) {
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string poly_json(const PolyA& a) {
  std::ostringstream os;
  os << "{\"q\":" << a.field()->q() << ",\"coeffs\":[";
  for (int i = 0; i <= a.deg(); ++i) {
    if (i) os << ",";
    os << a.coeff(i);
  }
  os << "]}";
  return os.str();
}

} // namespace dmc
