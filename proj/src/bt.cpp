#include "dmc/bt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

namespace dmc {

// ---------- Frac ----------

Frac::Frac(PolyA n, PolyA d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("Frac: zero denominator");
  if (num.is_zero()) {
    den = PolyA::one(num.field() ? num.field() : den.field());
    if (!num.field()) num = PolyA::zero(den.field());
    return;
  }
  PolyA g = gcd(num, den);
  if (g.deg() > 0) {
    num = num / g;
    den = den / g;
  }
  int l = den.lead();
  if (l != 1) {
    int li = den.field()->inv(l);
    num = num.scaled(li);
    den = den.scaled(li);
  }
}

Frac Frac::from_poly(PolyA p) {
  FqPtr F = p.field();
  return Frac(std::move(p), PolyA::one(F));
}

Frac Frac::from_laurent(const LaurentK& u) {
  if (!u.exact()) throw std::domain_error("Frac: inexact Laurent value");
  FqPtr F = u.field();
  if (u.known_zero()) return zero(F);
  // u = sum c_j pi^j, pi = 1/T: multiply by T^D, D = max(hi-1, 0)
  int D = std::max(u.hi() - 1, 0);
  std::vector<int> num(std::max(D - u.lo() + 1, 1), 0);
  for (int j = u.lo(); j < u.hi(); ++j) num[D - j] = u.coeff(j);
  return Frac(PolyA(F, num), PolyA::monomial(F, 1, D));
}

int Frac::ord() const {
  if (is_zero()) return INT_MAX;
  return den.deg() - num.deg();
}

Frac Frac::operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
Frac Frac::operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
Frac Frac::operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
Frac Frac::operator/(const Frac& o) const {
  if (o.is_zero()) throw std::domain_error("Frac: division by zero");
  return Frac(num * o.den, den * o.num);
}
Frac Frac::operator-() const { return Frac(-num, den); }

// ---------- matrices ----------

Mat2A Mat2A::identity(const FqPtr& F) {
  return {PolyA::one(F), PolyA::zero(F), PolyA::zero(F), PolyA::one(F)};
}
Mat2A Mat2A::w(const FqPtr& F) {
  return {PolyA::zero(F), PolyA::one(F), PolyA::one(F), PolyA::zero(F)};
}
Mat2A Mat2A::translation(const PolyA& x) {
  FqPtr F = x.field();
  return {PolyA::one(F), x, PolyA::zero(F), PolyA::one(F)};
}
Mat2A Mat2A::diag(const PolyA& x, const PolyA& y) {
  FqPtr F = x.field();
  return {x, PolyA::zero(F), PolyA::zero(F), y};
}
Mat2A Mat2A::operator*(const Mat2A& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}
Mat2A Mat2A::inverse() const {
  PolyA dt = det();
  if (dt.is_zero() || dt.deg() != 0) throw std::domain_error("Mat2A: det not a unit");
  int di = a.field()->inv(dt.coeff(0));
  return {d.scaled(di), (-b).scaled(di), (-c).scaled(di), a.scaled(di)};
}
bool Mat2A::is_in_gamma0(const PolyA& I) const {
  PolyA dt = det();
  if (dt.is_zero() || dt.deg() != 0) return false;
  if (I.deg() >= 1 && !(c % I).is_zero()) return false;
  return true;
}
std::string Mat2A::str() const {
  return "[" + a.str() + ", " + b.str() + "; " + c.str() + ", " + d.str() + "]";
}

Mat2K Mat2K::from_A(const Mat2A& m) {
  return {Frac::from_poly(m.a), Frac::from_poly(m.b), Frac::from_poly(m.c), Frac::from_poly(m.d)};
}
Mat2K Mat2K::operator*(const Mat2K& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

// ---------- vertices / edges ----------

VertexRep::VertexRep(int kk, LaurentK uu) : k(kk), u(std::move(uu)) {
  u = u.truncated_below(k);
}

std::string VertexRep::str() const {
  return "v(" + std::to_string(k) + ", " + u.str() + ")";
}

std::vector<VertexRep> neighbors(const VertexRep& v) {
  std::vector<VertexRep> out;
  out.push_back(v.down());
  const FqPtr& F = v.u.field();
  for (int c = 0; c < F->q(); ++c)
    out.emplace_back(v.k + 1, v.u + LaurentK::term(F, c, v.k));
  return out;
}

VertexRep reduce_matrix(const Mat2K& m) {
  Frac A = m.a, B = m.b, D = m.d;
  const Frac& c = m.c;
  const Frac& d = m.d;
  if (c.is_zero() && d.is_zero()) throw std::domain_error("reduce_matrix: singular");
  if (!c.is_zero() && (d.is_zero() || c.ord() <= d.ord())) {
    Frac f = d / c;      // in O_infty
    A = m.b - f * m.a;   // after col2 -= f col1 and column swap
    B = m.a;
    D = c;
  } else {
    Frac f = c / d; // in O_infty
    A = m.a - f * m.b;
    B = m.b;
    D = d;
  }
  if (A.is_zero()) throw std::domain_error("reduce_matrix: singular");
  Frac Ad = A / D;
  int k = Ad.ord();
  Frac Bd = B / D;
  LaurentK u = Bd.is_zero() ? LaurentK(Bd.den.field())
                            : embed_K(Bd.num, Bd.den, k).truncated_below(k);
  return VertexRep(k, std::move(u));
}

static Mat2K vertex_matrix(const VertexRep& v) {
  FqPtr F = v.u.field();
  Frac pik = v.k >= 0 ? Frac(PolyA::one(F), PolyA::monomial(F, 1, v.k))
                      : Frac::from_poly(PolyA::monomial(F, 1, -v.k));
  return {pik, Frac::from_laurent(v.u), Frac::zero(F), Frac::one(F)};
}

VertexRep gamma_act(const Mat2K& g, const VertexRep& v) {
  return reduce_matrix(g * vertex_matrix(v));
}
VertexRep gamma_act(const Mat2A& g, const VertexRep& v) {
  return gamma_act(Mat2K::from_A(g), v);
}

EdgeRep edge_from_pair(const VertexRep& o, const VertexRep& t) {
  if (t == o.down()) return {o, true};
  if (o == t.down()) return {t, false};
  throw std::domain_error("edge_from_pair: vertices not adjacent");
}

EdgeRep gamma_act_edge(const Mat2A& g, const EdgeRep& e) {
  return edge_from_pair(gamma_act(g, e.origin()), gamma_act(g, e.terminus()));
}

Mat2K edge_matrix(const EdgeRep& e) {
  Mat2K m = vertex_matrix(e.base);
  if (e.positive) return m;
  FqPtr F = e.base.u.field();
  Mat2A R{PolyA::zero(F), PolyA::T(F), PolyA::one(F), PolyA::zero(F)};
  return m * Mat2K::from_A(R);
}

RayReduction reduce_to_ray(const VertexRep& v) {
  FqPtr F = v.u.field();
  Mat2A gamma = Mat2A::identity(F);
  Mat2A W = Mat2A::w(F);
  VertexRep cur = v;
  for (int iter = 0; iter < 1000; ++iter) {
    PolyA P = cur.u.poly_part();
    if (!P.is_zero()) {
      Mat2A tr = Mat2A::translation(-P);
      gamma = tr * gamma;
      cur = VertexRep(cur.k, cur.u.frac_part());
    }
    if (cur.u.is_exact_zero()) {
      if (cur.k > 0) {
        gamma = W * gamma;
        cur = VertexRep(-cur.k, cur.u);
      }
      return {-cur.k, gamma};
    }
    gamma = W * gamma;
    cur = gamma_act(W, cur);
  }
  throw std::runtime_error("reduce_to_ray: did not terminate");
}

// ---------- P^1(A/I) ----------

static PolyA mod_I(const PolyA& x, const PolyA& I) { return x % I; }

P1::P1(const PolyA& I_) : I(I_), F(I_.field()) {
  trivial = I.deg() <= 0;
  if (trivial) return;
  std::vector<PolyA> residues;
  {
    long count = 1;
    for (int i = 0; i < I.deg(); ++i) count *= F->q();
    std::vector<int> c(std::max(I.deg(), 1), 0);
    for (long v = 0; v < count; ++v) {
      long t = v;
      for (int i = 0; i < I.deg(); ++i) { c[i] = (int)(t % F->q()); t /= F->q(); }
      residues.emplace_back(F, c);
    }
    std::sort(residues.begin(), residues.end());
  }
  for (const PolyA& r : residues)
    if (r.is_zero() || gcd(r, I).is_one()) {
      if (!r.is_zero() && gcd(r, I).is_one()) units.push_back(r);
    }
  // canonical representatives: scan pairs, normalize by unit scaling
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
  for (const PolyA& c : residues) {
    for (const PolyA& d : residues) {
      PolyA g = gcd(gcd(c, d), I);
      bool valid = g.is_one();
      if (c.is_zero() && d.is_zero()) valid = false;
      if (!valid) continue;
      // canonical form: least unit multiple
      PolyA bc = c, bd = d;
      for (const PolyA& u : units) {
        PolyA nc = mod_I(c * u, I), nd = mod_I(d * u, I);
        if (nc < bc || (nc == bc && nd < bd)) { bc = nc; bd = nd; }
      }
      if (bc == c && bd == d) {
        seen[{c.coeffs(), d.coeffs()}] = (int)pts.size();
        pts.emplace_back(c, d);
      }
    }
  }
}

int P1::index(const PolyA& c0, const PolyA& d0) const {
  if (trivial) return 0;
  PolyA c = mod_I(c0, I), d = mod_I(d0, I);
  PolyA bc = c, bd = d;
  bool found_unit = false;
  for (const PolyA& u : units) {
    PolyA nc = mod_I(c * u, I), nd = mod_I(d * u, I);
    if (!found_unit || nc < bc || (nc == bc && nd < bd)) { bc = nc; bd = nd; found_unit = true; }
  }
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i].first == bc && pts[i].second == bd) return (int)i;
  throw std::domain_error("P1::index: not a valid point");
}

int P1::act(int i, const Mat2A& g) const {
  if (trivial) return 0;
  const auto& [c, d] = pts[i];
  PolyA nc = mod_I(c * g.a + d * g.c, I);
  PolyA nd = mod_I(c * g.b + d * g.d, I);
  return index(nc, nd);
}

// ---------- quotient graph ----------

namespace {

struct WitnessUF {
  std::vector<int> parent;
  std::vector<Mat2A> wit; // point[i] . wit[i] ~ point[parent[i]]
  explicit WitnessUF(int n, const FqPtr& F) {
    parent.resize(n);
    wit.assign(n, Mat2A::identity(F));
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  // returns (root, matrix to root)
  std::pair<int, Mat2A> find(int i) {
    if (parent[i] == i) return {i, wit[i]};
    auto [r, m] = find(parent[i]);
    parent[i] = r;
    wit[i] = wit[i] * m;
    return {r, wit[i]};
  }
  void unite(int i, int j, const Mat2A& g) {
    // point_i . g = point_j
    auto [ri, mi] = find(i);
    auto [rj, mj] = find(j);
    if (ri == rj) return;
    // point_ri . (mi^{-1} g mj) = point_rj
    parent[ri] = rj;
    wit[ri] = mi.inverse() * g * mj;
  }
};

} // namespace

Int QuotientGraph::vgroup_order(int level) const {
  Int q(q_);
  if (level == 0) return (q * q - 1) * (q * q - q);
  Int r = (q - 1) * (q - 1);
  for (int i = 0; i <= level; ++i) r *= q;
  return r;
}

Int QuotientGraph::egroup_order(int level) const {
  Int q(q_);
  if (level == 0) return (q - 1) * (q - 1) * q;
  return vgroup_order(level);
}

QuotientGraph::QuotientGraph(long q, const PolyA& I, int depth)
    : q_(q), I_(I.monic()), F_(I.field()), p1_(I_) {
  degI_ = std::max(I_.deg(), 0);
  if (I_.is_zero()) throw std::domain_error("QuotientGraph: I must be nonzero");
  if (I_.deg() >= 1 && !is_squarefree(I_))
    throw std::domain_error("QuotientGraph: level must be square-free");
  N_ = std::max(4, 2 * degI_ + 4);
  if (depth > 0) N_ = std::max(N_, depth);
  build();
}

void QuotientGraph::build() {
  const int cap = 4 * N_ + 16;
  for (;;) {
    vroot_.assign(N_ + 1, {});
    eroot_.assign(N_ + 1, {});
    vwit_.assign(N_ + 1, {});
    ewit_.assign(N_ + 1, {});
    vgens_.assign(N_ + 1, {});
    egens_.assign(N_ + 1, {});

    // level group generators
    std::vector<Mat2A> gl2, borel;
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        for (int c = 0; c < q_; ++c)
          for (int d = 0; d < q_; ++d) {
            int det = F_->sub(F_->mul(a, d), F_->mul(b, c));
            if (det == 0) continue;
            Mat2A m{PolyA::constant(F_, a), PolyA::constant(F_, b),
                    PolyA::constant(F_, c), PolyA::constant(F_, d)};
            gl2.push_back(m);
            if (c == 0) borel.push_back(m);
          }
    vgens_[0] = gl2;
    egens_[0] = borel;
    for (int n = 1; n <= N_; ++n) {
      std::vector<Mat2A> gens;
      for (int a = 1; a < q_; ++a) {
        gens.push_back(Mat2A::diag(PolyA::constant(F_, a), PolyA::one(F_)));
        gens.push_back(Mat2A::diag(PolyA::one(F_), PolyA::constant(F_, a)));
      }
      int jmax = std::min(n, degI_); // higher powers act trivially mod I
      for (int j = 0; j <= jmax; ++j)
        for (int c = 1; c < q_; ++c)
          gens.push_back(Mat2A::translation(PolyA::monomial(F_, c, j)));
      vgens_[n] = gens;
      egens_[n] = gens;
    }

    int npts = p1_.size();
    auto run_uf = [&](const std::vector<Mat2A>& gens) {
      WitnessUF uf(npts, F_);
      for (int i = 0; i < npts; ++i)
        for (const Mat2A& g : gens) uf.unite(i, p1_.act(i, g), g);
      // canonical root: min index per class
      std::vector<int> root(npts);
      std::vector<Mat2A> wit(npts, Mat2A::identity(F_));
      std::map<int, int> min_of;
      for (int i = 0; i < npts; ++i) {
        int r = uf.find(i).first;
        auto it = min_of.find(r);
        if (it == min_of.end() || i < it->second) min_of[r] = i;
      }
      for (int i = 0; i < npts; ++i) {
        auto [r, mi] = uf.find(i);
        int m = min_of[r];
        auto [r2, mm] = uf.find(m);
        root[i] = m;
        wit[i] = mi * mm.inverse(); // point_i . wit = point_m
      }
      return std::make_pair(root, wit);
    };

    for (int n = 0; n <= N_; ++n) {
      auto [vr, vw] = run_uf(vgens_[n]);
      vroot_[n] = vr;
      vwit_[n] = vw;
      if (n == 0) {
        auto [er, ew] = run_uf(egens_[0]);
        eroot_[0] = er;
        ewit_[0] = ew;
      } else {
        eroot_[n] = vroot_[n];
        ewit_[n] = vwit_[n];
      }
    }

    bool stable = vroot_[N_] == vroot_[N_ - 1] && vroot_[N_ - 1] == vroot_[N_ - 2] &&
                  eroot_[N_ - 1] == vroot_[N_ - 1] && eroot_[N_ - 2] == vroot_[N_ - 2];
    if (stable) break;
    N_ *= 2;
    if (N_ > cap)
      throw std::runtime_error("QuotientGraph: ends did not stabilize below depth cap");
  }

  // ends: stable classes with tail starts
  int npts = p1_.size();
  std::vector<int> stable_roots;
  for (int i = 0; i < npts; ++i)
    if (vroot_[N_][i] == i) stable_roots.push_back(i);
  auto class_at = [&](int lvl, int root) {
    std::vector<int> cls;
    for (int i = 0; i < npts; ++i)
      if (vroot_[lvl][i] == vroot_[lvl][root]) cls.push_back(i);
    return cls;
  };
  std::vector<int> tail_start(npts, -1);
  for (int r : stable_roots) {
    std::vector<int> target = class_at(N_, r);
    int s = N_;
    for (int l = N_; l >= 1; --l) {
      if (class_at(l, r) == target && vroot_[l][r] == r)
        s = l;
      else
        break;
    }
    tail_start[r] = s;
  }
  // cusp labels
  for (int r : stable_roots) {
    PolyA c = p1_.trivial ? PolyA::zero(F_) : p1_.pts[r].first;
    PolyA label = c.is_zero() ? I_ : gcd(c, I_);
    ends_.push_back({r, tail_start[r], label});
  }
  {
    // sanity: labels exhaust the monic divisors exactly once (square-free I)
    std::vector<PolyA> labels;
    for (auto& e : ends_) labels.push_back(e.cusp);
    std::sort(labels.begin(), labels.end());
    std::vector<PolyA> divs =
        I_.deg() >= 1 ? monic_divisors(I_) : std::vector<PolyA>{PolyA::one(F_)};
    if (labels.size() != divs.size())
      throw std::logic_error("QuotientGraph: end count != divisor count");
    for (size_t i = 0; i < divs.size(); ++i)
      if (!(labels[i] == divs[i]))
        throw std::logic_error("QuotientGraph: cusp labels do not match divisors");
  }

  // materialize vertices and edges up to the horizon
  auto stable_of = [&](int root) { return vroot_[N_][root]; };
  for (int n = 0; n <= N_; ++n) {
    for (int i = 0; i < npts; ++i) {
      if (vroot_[n][i] != i) continue;
      QVertex v;
      v.level = n;
      v.root = i;
      Int orbit = 0;
      for (int j = 0; j < npts; ++j)
        if (vroot_[n][j] == i) orbit += 1;
      v.stab_order = vgroup_order(n) / orbit;
      int sr = stable_of(i);
      int ts = tail_start[sr] < 0 ? N_ + 1 : tail_start[sr];
      bool is_tail_class = (vroot_[n][sr] == i) && ((int)class_at(n, sr).size() ==
                                                    (int)class_at(N_, sr).size());
      v.finite_part = !(is_tail_class && n >= ts + 1);
      verts_.push_back(std::move(v));
    }
  }
  for (int n = 0; n < N_; ++n) {
    for (int i = 0; i < npts; ++i) {
      if (eroot_[n][i] != i) continue;
      QEdge e;
      e.level = n;
      e.root = i;
      e.v_lo = vertex_index(n, vroot_[n][i]);
      e.v_hi = vertex_index(n + 1, vroot_[n + 1][i]);
      Int orbit = 0;
      for (int j = 0; j < npts; ++j)
        if (eroot_[n][j] == i) orbit += 1;
      e.stab_order = egroup_order(n) / orbit;
      int sr = stable_of(i);
      int ts = tail_start[sr] < 0 ? N_ + 1 : tail_start[sr];
      bool is_tail_class = (eroot_[n][sr] == i) && ((int)class_at(n, sr).size() ==
                                                    (int)class_at(N_, sr).size());
      e.finite_part = !(is_tail_class && n >= ts);
      edges_.push_back(std::move(e));
    }
  }

  // lifts: complete the orbit point to a unimodular row and act on Lambda_n
  for (QVertex& v : verts_) {
    PolyA c = p1_.trivial ? PolyA::zero(F_) : p1_.pts[v.root].first;
    PolyA d = p1_.trivial ? PolyA::one(F_) : p1_.pts[v.root].second;
    PolyA ct = c, dt = d;
    if (ct.is_zero() && dt.is_zero()) dt = PolyA::one(F_);
    if (!ct.is_zero()) {
      // adjust dt so gcd(ct, dt) = 1
      bool ok = gcd(ct, dt).is_one();
      for (int deg = 0; !ok && deg <= ct.deg() + 1; ++deg) {
        for (const PolyA& lam : monic_of_degree(F_, deg)) {
          for (int s = 1; s < q_ && !ok; ++s) {
            PolyA cand = dt + (lam * I_).scaled(s);
            if (gcd(ct, cand).is_one()) { dt = cand; ok = true; }
          }
          if (ok) break;
        }
      }
      if (!ok) throw std::logic_error("QuotientGraph: unimodular lift failed");
    } else {
      if (!gcd(dt, I_).is_one() && I_.deg() >= 1)
        throw std::logic_error("QuotientGraph: bad point (0, d)");
      ct = PolyA::zero(F_);
      dt = PolyA::one(F_); // [0:d] ~ [0:1]
    }
    // x*dt - y*ct = 1
    PolyA x, y;
    PolyA g = ext_gcd(dt, ct, x, y);
    if (!g.is_one()) throw std::logic_error("QuotientGraph: lift gcd != 1");
    Mat2A gamma_inv{x, -y, ct, dt};
    {
      PolyA det = gamma_inv.det();
      if (det.deg() != 0) throw std::logic_error("QuotientGraph: lift det not unit");
    }
    v.gamma_inv = gamma_inv;
    LaurentK zero(F_);
    v.lift = gamma_act(gamma_inv, VertexRep(-v.level, zero));
    if (!p1_.trivial && p1_.index(gamma_inv.c, gamma_inv.d) != v.root)
      throw std::logic_error("QuotientGraph: lift does not represent its orbit");
  }

  // stars (tree edges into the lift), for vertices below the horizon
  for (QVertex& v : verts_) {
    if (v.level >= N_) continue;
    for (const VertexRep& nb : neighbors(v.lift)) {
      EdgeRep e = edge_from_pair(nb, v.lift);
      v.star.push_back(classify_edge(e));
    }
  }
}

int QuotientGraph::vertex_index(int level, int root) const {
  for (size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].level == level && verts_[i].root == root) return (int)i;
  throw std::domain_error("vertex_index: not found");
}

int QuotientGraph::edge_index(int level, int root) const {
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].level == level && edges_[i].root == root) return (int)i;
  throw std::domain_error("edge_index: not found");
}

int QuotientGraph::p1_point_of_gamma_inv(const Mat2A& m) const {
  if (p1_.trivial) return 0;
  return p1_.index(m.c, m.d);
}

int QuotientGraph::classify_vertex(const VertexRep& v) const {
  RayReduction rr = reduce_to_ray(v);
  if (rr.n > N_) throw std::runtime_error("classify_vertex: beyond horizon");
  int pt = p1_point_of_gamma_inv(rr.gamma.inverse());
  return vertex_index(rr.n, vroot_[rr.n][pt]);
}

std::pair<int, int> QuotientGraph::classify_edge(const EdgeRep& e) const {
  VertexRep o = e.origin(), t = e.terminus();
  RayReduction ro = reduce_to_ray(o), rt = reduce_to_ray(t);
  if (std::abs(ro.n - rt.n) != 1)
    throw std::logic_error("classify_edge: levels not adjacent");
  bool o_low = ro.n < rt.n;
  const VertexRep& x = o_low ? o : t;
  const RayReduction& rx = o_low ? ro : rt;
  const VertexRep& y = o_low ? t : o;
  int n = rx.n;
  if (n >= N_) throw std::runtime_error("classify_edge: beyond horizon");
  VertexRep y2 = gamma_act(rx.gamma, y);
  Mat2A sigma = Mat2A::identity(F_);
  if (y2.k == -(n + 1)) {
    // already the standard ray edge
  } else if (n == 0 && y2.k == 1) {
    int c0 = y2.u.known_zero() ? 0 : y2.u.coeff(0);
    sigma = Mat2A::w(F_) * Mat2A::translation(-PolyA::constant(F_, c0));
  } else {
    throw std::logic_error("classify_edge: unexpected reduced neighbor");
  }
  Mat2A gamma = sigma * rx.gamma;
  int pt = p1_point_of_gamma_inv(gamma.inverse());
  int idx = edge_index(n, eroot_[n][pt]);
  return {idx, o_low ? 1 : -1};
}

std::pair<int, Mat2A> QuotientGraph::reduce_mod_gamma0(const VertexRep& v) const {
  RayReduction rr = reduce_to_ray(v);
  if (rr.n > N_) throw std::runtime_error("reduce_mod_gamma0: beyond horizon");
  int pt = p1_point_of_gamma_inv(rr.gamma.inverse());
  int root = vroot_[rr.n][pt];
  int idx = vertex_index(rr.n, root);
  Mat2A sigma_v = p1_.trivial ? Mat2A::identity(F_) : vwit_[rr.n][pt];
  Mat2A delta = verts_[idx].gamma_inv * sigma_v.inverse() * rr.gamma;
  if (!delta.is_in_gamma0(I_))
    throw std::logic_error("reduce_mod_gamma0: witness not in Gamma_0(I)");
  if (gamma_act(delta, v) != verts_[idx].lift)
    throw std::logic_error("reduce_mod_gamma0: witness does not map to the lift");
  return {idx, delta};
}

std::vector<int> QuotientGraph::finite_vertices() const {
  std::vector<int> out;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].finite_part) out.push_back((int)i);
  return out;
}

std::vector<int> QuotientGraph::finite_edges() const {
  std::vector<int> out;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].finite_part) out.push_back((int)i);
  return out;
}

int QuotientGraph::betti() const {
  std::vector<int> fv = finite_vertices(), fe = finite_edges();
  std::map<int, int> comp;
  std::function<int(int)> find = [&](int x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (int v : fv) comp[v] = v;
  for (int e : fe) {
    int a = find(edges_[e].v_lo), b = find(edges_[e].v_hi);
    if (a != b) comp[a] = b;
  }
  int ncomp = 0;
  for (int v : fv)
    if (find(v) == v) ++ncomp;
  return (int)fe.size() - (int)fv.size() + ncomp;
}

std::vector<std::vector<int>> QuotientGraph::cycle_basis() const {
  std::vector<int> fv = finite_vertices(), fe = finite_edges();
  std::map<int, std::pair<int, int>> parent; // vertex -> (parent vertex, signed edge id)
  std::map<int, bool> seen;
  std::vector<std::vector<int>> cycles;
  std::vector<int> tree_edge(edges_.size(), 0);
  for (int root : fv) {
    if (seen.count(root)) continue;
    std::queue<int> bfs;
    bfs.push(root);
    seen[root] = true;
    parent[root] = {-1, 0};
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int e : fe) {
        int other = -1, sgn = 0;
        if (edges_[e].v_lo == v) { other = edges_[e].v_hi; sgn = 1; }
        else if (edges_[e].v_hi == v) { other = edges_[e].v_lo; sgn = -1; }
        else continue;
        if (!seen.count(other)) {
          seen[other] = true;
          parent[other] = {v, sgn * (e + 1)};
          tree_edge[e] = 1;
          bfs.push(other);
        }
      }
    }
  }
  auto path_to_root = [&](int v) {
    std::vector<int> p;
    while (parent[v].first >= 0) {
      p.push_back(parent[v].second);
      v = parent[v].first;
    }
    return p;
  };
  for (int e : fe) {
    if (tree_edge[e]) continue;
    // cycle: e from lo to hi, then hi -> root -> lo reversed
    std::vector<int> cyc{e + 1};
    for (int s : path_to_root(edges_[e].v_hi)) cyc.push_back(-s);
    std::vector<int> back = path_to_root(edges_[e].v_lo);
    for (auto it = back.rbegin(); it != back.rend(); ++it) cyc.push_back(*it);
    cycles.push_back(cyc);
  }
  return cycles;
}

std::string QuotientGraph::dot() const {
  std::ostringstream os;
  os << "graph T0 {\n";
  for (size_t i = 0; i < verts_.size(); ++i) {
    const QVertex& v = verts_[i];
    os << "  v" << i << " [label=\"(" << v.level << "," << v.root << ") stab="
       << v.stab_order.get_str() << (v.finite_part ? "" : " end") << "\"];\n";
  }
  for (const QEdge& e : edges_) {
    os << "  v" << e.v_lo << " -- v" << e.v_hi << " [label=\"stab="
       << e.stab_order.get_str() << "\"" << (e.finite_part ? "" : " style=dashed") << "];\n";
  }
  for (const QEnd& en : ends_)
    os << "  // end class " << en.cls << " cusp P_" << en.cusp.str()
       << " from level " << en.tail_start << "\n";
  os << "}\n";
  return os.str();
}

std::string QuotientGraph::json() const {
  std::ostringstream os;
  os << "{\"schema\":\"dmc-graph-v1\",\"q\":" << q_ << ",\"I\":\"" << I_.str()
     << "\",\"horizon\":" << N_ << ",\"vertices\":[";
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << ",";
    os << "{\"level\":" << verts_[i].level << ",\"root\":" << verts_[i].root
       << ",\"stab\":" << verts_[i].stab_order.get_str()
       << ",\"finite\":" << (verts_[i].finite_part ? "true" : "false") << "}";
  }
  os << "],\"edges\":[";
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ",";
    os << "{\"level\":" << edges_[i].level << ",\"root\":" << edges_[i].root
       << ",\"lo\":" << edges_[i].v_lo << ",\"hi\":" << edges_[i].v_hi
       << ",\"stab\":" << edges_[i].stab_order.get_str()
       << ",\"finite\":" << (edges_[i].finite_part ? "true" : "false") << "}";
  }
  os << "],\"ends\":[";
  for (size_t i = 0; i < ends_.size(); ++i) {
    if (i) os << ",";
    os << "{\"class\":" << ends_[i].cls << ",\"tail_start\":" << ends_[i].tail_start
       << ",\"cusp\":\"" << ends_[i].cusp.str() << "\"}";
  }
  os << "],\"betti\":" << betti() << "}";
  return os.str();
}

LiftCheckReport lift_check(const QuotientGraph& g) {
  for (const QVertex& v : g.vertices()) {
    if (v.level >= g.horizon()) continue;
    if ((long)v.star.size() != g.q() + 1)
      return {false, "star size != q+1 at level " + std::to_string(v.level)};
    // multiplicity of each incident orbit must equal [Stab(v):Stab(e)]
    std::map<int, int> mult;
    for (auto& [e, dir] : v.star) mult[e]++;
    for (auto& [e, m] : mult) {
      const QEdge& qe = g.edges()[e];
      Int ratio = v.stab_order / qe.stab_order;
      if (v.stab_order % qe.stab_order != 0 || ratio != m)
        return {false, "stabilizer index mismatch at vertex level " +
                           std::to_string(v.level) + ": mult " + std::to_string(m) +
                           " vs " + ratio.get_str()};
      bool touches = (qe.v_lo == g.vertex_index(v.level, v.root)) ||
                     (qe.v_hi == g.vertex_index(v.level, v.root));
      if (!touches) return {false, "star edge does not touch its vertex"};
    }
  }
  return {true, ""};
}

LiftCheckReport witness_check(const QuotientGraph& g) {
  const FqPtr& F = g.field();
  // translate each lift by a few elements of Gamma_0(I) and re-classify
  std::vector<Mat2A> gammas;
  gammas.push_back(Mat2A::translation(PolyA::T(F)));
  gammas.push_back(Mat2A::translation(PolyA::one(F)));
  Mat2A lower = Mat2A::identity(F);
  lower.c = g.I();
  gammas.push_back(lower);
  gammas.push_back(gammas[0] * lower * gammas[1]);
  for (const QVertex& v : g.vertices()) {
    if (v.level >= g.horizon() - 1) continue;
    for (const Mat2A& ga : gammas) {
      VertexRep moved = gamma_act(ga, v.lift);
      auto [idx, delta] = g.reduce_mod_gamma0(moved); // throws on bad witness
      if (!(g.vertices()[idx].level == v.level && g.vertices()[idx].root == v.root))
        return {false, "orbit id changed under Gamma_0(I) translate"};
    }
  }
  return {true, ""};
}

} // namespace dmc
