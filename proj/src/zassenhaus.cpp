#include "dmc/zassenhaus.hpp"

#include <algorithm>
#include <functional>

namespace dmc {

namespace {

using ZPoly = std::vector<Int>; // low-to-high

Int igcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zreduce(ZPoly& a, const Int& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r = zmul(a, b);
  zreduce(r, m);
  return r;
}

ZPoly zsub_mod(ZPoly a, const ZPoly& b, const Int& m) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zreduce(a, m);
  return a;
}

Int zinv_mod(const Int& a, const Int& m) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw std::domain_error("zinv_mod: not invertible");
  s %= m;
  if (s < 0) s += m;
  return s;
}

// divide mod m by a divisor with invertible leading coefficient
std::pair<ZPoly, ZPoly> zdivmod_mod(ZPoly a, const ZPoly& b, const Int& m) {
  zreduce(a, m);
  if (b.empty()) throw std::domain_error("zdivmod_mod: zero divisor");
  Int linv = zinv_mod(b.back(), m);
  ZPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  for (int d = (int)a.size() - 1; d >= (int)b.size() - 1; --d) {
    Int c = (a[d] * linv) % m;
    if (c < 0) c += m;
    if (c == 0) continue;
    int shift = d - (int)b.size() + 1;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= c * b[i];
      a[shift + i] %= m;
      if (a[shift + i] < 0) a[shift + i] += m;
    }
  }
  ztrim(a);
  ztrim(q);
  return {q, a};
}

ZPoly zmod_mod(const ZPoly& a, const ZPoly& f, const Int& m) {
  return zdivmod_mod(a, f, m).second;
}

ZPoly zgcd_modp(ZPoly a, ZPoly b, const Int& p) {
  zreduce(a, p);
  zreduce(b, p);
  while (!b.empty()) {
    ZPoly r = zdivmod_mod(a, b, p).second;
    a = b;
    b = r;
  }
  if (!a.empty()) {
    Int inv = zinv_mod(a.back(), p);
    for (auto& c : a) { c = (c * inv) % p; }
  }
  return a;
}

// s*a + t*b = gcd over F_p
ZPoly zextgcd_modp(ZPoly a, ZPoly b, const Int& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  zreduce(r0, p);
  zreduce(r1, p);
  while (!r1.empty()) {
    auto [q, r] = zdivmod_mod(r0, r1, p);
    ZPoly ns = zsub_mod(s0, zmul_mod(q, s1, p), p);
    ZPoly nt = zsub_mod(t0, zmul_mod(q, t1, p), p);
    r0 = r1; r1 = r;
    s0 = s1; s1 = ns;
    t0 = t1; t1 = nt;
  }
  if (!r0.empty()) {
    Int inv = zinv_mod(r0.back(), p);
    for (auto& c : r0) c = (c * inv) % p;
    for (auto& c : s0) c = (c * inv) % p;
    for (auto& c : t0) c = (c * inv) % p;
  }
  s = s0;
  t = t0;
  return r0;
}

ZPoly zpow_mod(ZPoly base, Int e, const ZPoly& f, const Int& p) {
  ZPoly r{1};
  base = zmod_mod(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = zmod_mod(zmul(r, base), f, p);
    base = zmod_mod(zmul(base, base), f, p);
    e >>= 1;
  }
  return r;
}

// f monic squarefree mod p: distinct-degree + Cantor-Zassenhaus splitting
void factor_modp(const ZPoly& f, const Int& p, std::vector<ZPoly>& out) {
  ZPoly x{0, 1};
  ZPoly h = x;
  ZPoly rest = f;
  unsigned long seed = 0x9e3779b97f4a7c15ULL;
  auto rnd = [&] {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  for (int d = 1; (int)rest.size() - 1 >= d; ++d) {
    if ((int)rest.size() - 1 < 2 * d) { out.push_back(rest); rest = {1}; break; }
    h = zpow_mod(h, p, rest, p);
    ZPoly g = zgcd_modp(zsub_mod(h, x, p), rest, p);
    if (g.size() <= 1) continue;
    std::vector<ZPoly> stack{g};
    while (!stack.empty()) {
      ZPoly cur = stack.back();
      stack.pop_back();
      if ((int)cur.size() - 1 == d) { out.push_back(cur); continue; }
      for (;;) {
        ZPoly r((size_t)((int)cur.size() - 1));
        for (auto& c : r) c = Int((unsigned long)(rnd() >> 32)) % p;
        ztrim(r);
        if (r.empty()) continue;
        ZPoly s;
        if (p == 2) {
          s = r;
          ZPoly acc = r;
          for (int i = 1; i < d; ++i) {
            acc = zmod_mod(zmul(acc, acc), cur, p);
            s = zsub_mod(s, acc, p);
          }
        } else {
          Int e = 1;
          for (int i = 0; i < d; ++i) e *= p;
          s = zpow_mod(r, (e - 1) / 2, cur, p);
          if (s.empty()) continue;
          s[0] -= 1;
          zreduce(s, p);
        }
        ZPoly g2 = zgcd_modp(s, cur, p);
        if (g2.size() > 1 && g2.size() < cur.size()) {
          stack.push_back(g2);
          stack.push_back(zdivmod_mod(cur, g2, p).first);
          break;
        }
      }
    }
    rest = zdivmod_mod(rest, g, p).first;
    if (rest.size() <= 1) break;
  }
  if (rest.size() > 1) out.push_back(rest);
}

// Linear multifactor Hensel: f monic over Z, f = prod gs mod p (gs monic,
// pairwise coprime mod p). Lift factors mod p^K.
std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<ZPoly> gs, const Int& p, int K) {
  size_t n = gs.size();
  // h_i = inverse of prod_{j != i} g_j modulo (g_i, p)
  std::vector<ZPoly> hs(n);
  for (size_t i = 0; i < n; ++i) {
    ZPoly G{1};
    for (size_t j = 0; j < n; ++j)
      if (j != i) G = zmod_mod(zmul(G, gs[j]), gs[i], p);
    ZPoly s, t;
    ZPoly g = zextgcd_modp(G, gs[i], p, s, t);
    if (g.size() != 1) throw std::logic_error("hensel: factors not coprime");
    hs[i] = s; // s*G = 1 mod (g_i, p)
  }
  Int pk = p;
  for (int step = 1; step < K; ++step) {
    Int pk1 = pk * p;
    ZPoly prod{1};
    for (const auto& g : gs) prod = zmul(prod, g);
    ZPoly E = f;
    E.resize(std::max(E.size(), prod.size()), 0);
    for (size_t i = 0; i < prod.size(); ++i) E[i] -= prod[i];
    // E is divisible by pk; e = E/pk mod p
    ZPoly e(E.size());
    for (size_t i = 0; i < E.size(); ++i) {
      Int v = E[i] % pk1;
      if (v < 0) v += pk1;
      if (v % pk != 0) throw std::logic_error("hensel: error term not divisible");
      e[i] = (v / pk) % p;
    }
    ztrim(e);
    for (size_t i = 0; i < n; ++i) {
      ZPoly di = zmod_mod(zmul(e, hs[i]), gs[i], p);
      // g_i += pk * d_i
      gs[i].resize(std::max(gs[i].size(), di.size()), 0);
      for (size_t j = 0; j < di.size(); ++j) gs[i][j] += pk * di[j];
    }
    pk = pk1;
  }
  return gs;
}

} // namespace

QPoly squarefree_part(const QPoly& f) {
  if (f.deg() <= 1) return f;
  QPoly g = tpoly_gcd(f, f.derivative());
  if (g.deg() == 0) return f;
  return f / g;
}

std::vector<std::pair<QPoly, int>> factor_rational_poly(const QPoly& fin) {
  std::vector<std::pair<QPoly, int>> result;
  if (fin.deg() <= 0) return result;
  QPoly f = fin.scaled(Rat(1) / fin.lead());
  if (f.deg() == 1) { result.emplace_back(f, 1); return result; }

  // multiplicity split: for each m, the factors appearing exactly m times
  std::vector<std::pair<QPoly, int>> sqf;
  {
    QPoly a = f;
    int m = 1;
    while (a.deg() > 0) {
      QPoly g = tpoly_gcd(a, a.derivative());
      if (g.deg() == 0) { sqf.emplace_back(a, m); break; }
      QPoly exact = (a / g); // squarefree product of all primes of a
      QPoly next = g;
      // primes with multiplicity exactly m in f divide exact but not next
      QPoly only = exact / tpoly_gcd(exact, next);
      if (only.deg() > 0) sqf.emplace_back(only, m);
      a = next;
      ++m;
    }
  }

  for (auto& [sf0, mult] : sqf) {
    QPoly sf = sf0.scaled(Rat(1) / sf0.lead());
    if (sf.deg() == 1) { result.emplace_back(sf, mult); continue; }
    // x = y/d with d = lcm of denominators gives a monic integer polynomial
    Int d = 1;
    for (int i = 0; i <= sf.deg(); ++i) {
      Int den = sf.coeff(i).get_den();
      d = d / igcd(d, den) * den;
    }
    int n = sf.deg();
    ZPoly gz(n + 1);
    Int dp = 1;
    for (int i = n; i >= 0; --i) {
      Rat c = sf.coeff(i) * Rat(dp);
      c.canonicalize();
      if (c.get_den() != 1) throw std::logic_error("denominator clearing failed");
      gz[i] = c.get_num();
      dp *= d;
    }

    Int p = 3;
    auto good = [&](const Int& pp) {
      ZPoly fp = gz, der(n);
      zreduce(fp, pp);
      if ((int)fp.size() - 1 != n) return false;
      for (int i = 1; i <= n; ++i) der[i - 1] = gz[i] * i;
      zreduce(der, pp);
      return zgcd_modp(fp, der, pp).size() == 1;
    };
    while (!good(p)) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());

    std::vector<ZPoly> modfac;
    {
      ZPoly fp = gz;
      zreduce(fp, p);
      factor_modp(fp, p, modfac);
    }
    std::vector<ZPoly> found;
    if (modfac.size() == 1) {
      found.push_back(gz);
    } else {
      // Landau-Mignotte style bound on factor coefficients
      Int norm2 = 0;
      for (auto& c : gz) norm2 += c * c;
      Int bound;
      mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
      bound = (bound + 1) << (n + 1);
      int K = 1;
      Int pk = p;
      while (pk < 2 * bound) { pk *= p; ++K; }
      std::vector<ZPoly> lifted = hensel_lift(gz, modfac, p, K);
      Int mod = 1;
      for (int i = 0; i < K; ++i) mod *= p;
      auto centered = [&](Int c) {
        c %= mod;
        if (c < 0) c += mod;
        if (2 * c > mod) c -= mod;
        return c;
      };
      int nfac = (int)lifted.size();
      std::vector<int> alive(nfac, 1);
      ZPoly remaining = gz;
      for (int sz = 1; sz <= nfac; ++sz) {
        bool progress = true;
        while (progress) {
          progress = false;
          std::vector<int> idx;
          for (int i = 0; i < nfac; ++i)
            if (alive[i]) idx.push_back(i);
          if ((int)idx.size() < sz) break;
          std::vector<int> comb(sz);
          std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
            if (depth == sz) {
              ZPoly cand{1};
              for (int j = 0; j < sz; ++j) cand = zmul_mod(cand, lifted[comb[j]], mod);
              for (auto& c : cand) c = centered(c);
              if (cand.back() != 1) return false;
              ZPoly a = remaining, q;
              if (a.size() < cand.size()) return false;
              q.assign(a.size() - cand.size() + 1, 0);
              for (int dd = (int)a.size() - 1; dd >= (int)cand.size() - 1; --dd) {
                Int c = a[dd];
                int shift = dd - (int)cand.size() + 1;
                q[shift] = c;
                for (size_t i2 = 0; i2 < cand.size(); ++i2) a[shift + i2] -= c * cand[i2];
              }
              for (auto& c : a)
                if (c != 0) return false;
              found.push_back(cand);
              ztrim(q);
              remaining = q;
              for (int j = 0; j < sz; ++j) alive[comb[j]] = 0;
              return true;
            }
            for (int i2 = start; i2 < (int)idx.size(); ++i2) {
              if (!alive[idx[i2]]) continue;
              comb[depth] = idx[i2];
              if (rec(i2 + 1, depth + 1)) return true;
            }
            return false;
          };
          if (rec(0, 0)) progress = true;
        }
      }
      if (remaining.size() > 1) found.push_back(remaining);
    }

    for (const ZPoly& g : found) {
      int dg = (int)g.size() - 1;
      std::vector<Rat> rc(dg + 1);
      Rat dp2 = 1;
      for (int i = dg; i >= 0; --i) {
        rc[i] = Rat(g[i]) / dp2;
        dp2 *= d;
      }
      QPoly qf(std::move(rc));
      result.emplace_back(qf.scaled(Rat(1) / qf.lead()), mult);
    }
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (int i = a.first.deg(); i >= 0; --i) {
      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    }
    return false;
  });
  return result;
}

bool rational_poly_irreducible(const QPoly& f) {
  auto fs = factor_rational_poly(f);
  return fs.size() == 1 && fs[0].second == 1;
}

} // namespace dmc
