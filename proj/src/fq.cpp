#include "dmc/fq.hpp"

#include <map>
#include <mutex>

namespace dmc {

namespace {

// Multiply two F_p[x] polynomials given as digit vectors, reduce mod m.
std::vector<int> fp_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<int>& m, int p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  int n = (int)m.size() - 1;
  for (int d = (int)r.size() - 1; d >= n; --d) {
    int c = r[d];
    if (c == 0) continue;
    // m is monic: subtract c * x^{d-n} * m
    for (int i = 0; i <= n; ++i) {
      int& t = r[d - n + i];
      t = ((t - c * m[i]) % p + p) % p;
    }
  }
  r.resize(n, 0);
  return r;
}

std::vector<int> digits_of(long v, int p, int n) {
  std::vector<int> d(n, 0);
  for (int i = 0; i < n; ++i) { d[i] = (int)(v % p); v /= p; }
  return d;
}

long value_of(const std::vector<int>& d, int p) {
  long v = 0;
  for (int i = (int)d.size() - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

bool fp_poly_irreducible(const std::vector<int>& m, int p,
                         const std::vector<std::vector<int>>& smaller) {
  // trial division by the known irreducibles of degree <= deg/2
  int deg = (int)m.size() - 1;
  for (const auto& f : smaller) {
    if (2 * ((int)f.size() - 1) > deg) break;
    // long division m / f over F_p, check remainder
    std::vector<int> r = m;
    int df = (int)f.size() - 1;
    for (int d = (int)r.size() - 1; d >= df; --d) {
      int c = r[d];
      if (c == 0) continue;
      // f monic
      for (int i = 0; i <= df; ++i) {
        int& t = r[d - df + i];
        t = ((t - c * f[i]) % p + p) % p;
      }
    }
    bool zero = true;
    for (int i = 0; i < df; ++i) if (r[i] != 0) { zero = false; break; }
    if (zero) return false;
  }
  return true;
}

// Least monic irreducible of degree n over F_p in the digit order.
std::vector<int> least_irreducible(int p, int n) {
  if (n == 1) return {0, 1}; // x (unused for arithmetic; n=1 has no reduction)
  // gather irreducibles of degree <= n/2 by the same recipe (all of them)
  std::vector<std::vector<int>> small;
  for (int d = 1; 2 * d <= n; ++d) {
    long count = 1; for (int i = 0; i < d; ++i) count *= p;
    for (long v = 0; v < count; ++v) {
      std::vector<int> f = digits_of(v, p, d);
      f.push_back(1);
      if (fp_poly_irreducible(f, p, small)) small.push_back(f);
    }
  }
  long count = 1; for (int i = 0; i < n; ++i) count *= p;
  for (long v = 0; v < count; ++v) {
    std::vector<int> m = digits_of(v, p, n);
    m.push_back(1);
    if (fp_poly_irreducible(m, p, small)) return m;
  }
  throw std::logic_error("no irreducible found");
}

} // namespace

FqField::FqField(int p, int n) : p_(p), n_(n) {
  q_ = 1;
  for (int i = 0; i < n; ++i) q_ *= p;
  if (q_ > 4096) throw std::invalid_argument("q too large for table-based F_q");
  irred_ = least_irreducible(p, n);

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  tr_.resize(q_);

  for (long a = 0; a < q_; ++a) {
    auto da = digits_of(a, p, n);
    std::vector<int> dn(n);
    for (int i = 0; i < n; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = (int)value_of(dn, p);
    for (long b = 0; b < q_; ++b) {
      auto db = digits_of(b, p, n);
      std::vector<int> ds(n);
      for (int i = 0; i < n; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = (int)value_of(ds, p);
      mul_[a * q_ + b] =
          n == 1 ? (int)((a * b) % p)
                 : (int)value_of(fp_mulmod(da, db, irred_, p), p);
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) { inv_[a] = (int)b; break; }

  // Tr(a) = a + a^p + ... + a^{p^{n-1}}
  for (long a = 0; a < q_; ++a) {
    int acc = 0, x = (int)a;
    for (int i = 0; i < n; ++i) {
      acc = add(acc, x);
      int xp = x;
      for (int j = 1; j < p; ++j) xp = mul(xp, x);
      x = xp;
    }
    // acc lies in the prime field: its digit vector is (c,0,...,0)
    tr_[a] = acc % p;
  }
}

int FqField::inv(int a) const {
  if (a == 0) throw std::domain_error("F_q: inverse of zero");
  return inv_[a];
}

int FqField::pow(int a, long e) const {
  if (e < 0) { a = inv(a); e = -e; }
  int r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool is_prime_power(long q, int& p, int& n) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      long v = q; n = 0;
      while (v % d == 0) { v /= d; ++n; }
      if (v != 1) return false;
      p = (int)d;
      return true;
    }
  }
  p = (int)q; n = 1;
  return true;
}

FqPtr FqField::get(long q) {
  static std::map<long, FqPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  int p, n;
  if (!is_prime_power(q, p, n)) throw std::invalid_argument("q must be a prime power");
  auto F = std::make_shared<FqField>(p, n);
  cache[q] = F;
  return F;
}

} // namespace dmc
