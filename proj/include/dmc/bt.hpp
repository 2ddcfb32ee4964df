#pragma once

#include "dmc/laurent.hpp"
#include "dmc/poly.hpp"
#include "dmc/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dmc {

// ---------- exact rational functions in K = F_q(T) ----------

// Reduced fraction a/b of polynomials, denominator monic.
struct Frac {
  PolyA num, den;
  Frac() = default;
  Frac(PolyA n, PolyA d);
  static Frac from_poly(PolyA p);
  static Frac zero(const FqPtr& F) { return from_poly(PolyA::zero(F)); }
  static Frac one(const FqPtr& F) { return from_poly(PolyA::one(F)); }
  static Frac from_laurent(const LaurentK& u);

  bool is_zero() const { return num.is_zero(); }
  // ord_infty = deg den - deg num; INT_MAX for zero
  int ord() const;
  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator/(const Frac& o) const;
  Frac operator-() const;
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  // Laurent expansion at infinity, coefficients known below precision.
  LaurentK expand(int precision) const { return embed_K(num, den, precision); }
};

// 2x2 matrices over A and over K
struct Mat2A {
  PolyA a, b, c, d;
  static Mat2A identity(const FqPtr& F);
  static Mat2A w(const FqPtr& F);                 // (0 1; 1 0)
  static Mat2A translation(const PolyA& x);       // (1 x; 0 1)
  static Mat2A diag(const PolyA& x, const PolyA& y);
  Mat2A operator*(const Mat2A& o) const;
  PolyA det() const { return a * d - b * c; }
  // inverse when det is a unit of A
  Mat2A inverse() const;
  bool is_in_gamma0(const PolyA& I) const; // entries integral by type; checks det unit, c = 0 mod I
  std::string str() const;
};

struct Mat2K {
  Frac a, b, c, d;
  static Mat2K from_A(const Mat2A& m);
  Mat2K operator*(const Mat2K& o) const;
  Frac det() const { return a * d - b * c; }
};

// ---------- tree vertices and edges ----------

// v(k, u): class of the matrix (pi^k u; 0 1); u reduced mod pi^k O
// (support strictly below exponent k), exact.
struct VertexRep {
  int k = 0;
  LaurentK u;
  VertexRep() = default;
  VertexRep(int kk, LaurentK uu);
  bool operator==(const VertexRep& o) const { return k == o.k && u == o.u; }
  bool operator!=(const VertexRep& o) const { return !(*this == o); }
  static VertexRep base(const FqPtr& F) { return VertexRep(0, LaurentK(F)); }
  // the unique neighbor toward the tree end infinity: v(k-1, u mod pi^{k-1})
  VertexRep down() const { return VertexRep(k - 1, u.truncated_below(k - 1)); }
  std::string str() const;
};

// Oriented edge. positive=true is e(k,u): o = v(k,u), t = v(k-1,u).
struct EdgeRep {
  VertexRep base;
  bool positive = true;
  VertexRep origin() const { return positive ? base : base.down(); }
  VertexRep terminus() const { return positive ? base.down() : base; }
  EdgeRep reversed() const { return {base, !positive}; }
  int sgn() const { return positive ? 1 : -1; }
};

// q+1 neighbors: one v(k-1,.), q of the form v(k+1, u + c pi^k)
std::vector<VertexRep> neighbors(const VertexRep& v);

// canonical vertex of the lattice class of a nonsingular matrix over K
VertexRep reduce_matrix(const Mat2K& m);
VertexRep gamma_act(const Mat2K& g, const VertexRep& v);
VertexRep gamma_act(const Mat2A& g, const VertexRep& v);
// image of the oriented edge under g
EdgeRep gamma_act_edge(const Mat2A& g, const EdgeRep& e);
// oriented edge from an ordered pair of adjacent vertices
EdgeRep edge_from_pair(const VertexRep& o, const VertexRep& t);
// coset matrix of an oriented edge (maps the base edge e_0 to it)
Mat2K edge_matrix(const EdgeRep& e);

// GL2(A)-reduction: n with gamma * v = v(-n, 0) = Lambda_n.
struct RayReduction {
  int n;
  Mat2A gamma;
};
RayReduction reduce_to_ray(const VertexRep& v);

// ---------- P^1(A/I) ----------

struct P1 {
  PolyA I;
  FqPtr F;
  bool trivial; // I constant: single point
  std::vector<std::pair<PolyA, PolyA>> pts; // canonical representatives
  std::vector<PolyA> units;                 // units of A/I

  explicit P1(const PolyA& I_);
  int size() const { return trivial ? 1 : (int)pts.size(); }
  int index(const PolyA& c, const PolyA& d) const; // canonical lookup
  int act(int i, const Mat2A& g) const;            // right action index
};

// ---------- the quotient graph T_0(I) ----------

struct QVertex {
  int level;
  int root;           // canonical point index of the orbit
  Int stab_order;     // |Stab_{Gamma_0(I)}(v)|
  bool finite_part;
  VertexRep lift;     // witness tree vertex in this orbit
  Mat2A gamma_inv;    // lift = gamma_inv * Lambda_level ; bottom row represents the orbit point
  std::vector<std::pair<int, int>> star; // (edge index, +1 if this is the low end) x (q+1) tree-edges into the lift
};

struct QEdge {
  int level;      // between level and level+1
  int root;       // canonical point index of the edge orbit
  int v_lo, v_hi; // indices into vertices
  Int stab_order;
  bool finite_part;
};

struct QEnd {
  int cls;          // stable class root (point index)
  int tail_start;   // edges (m, cls) for m >= tail_start form the end
  PolyA cusp;       // monic divisor d of I: the cusp P_d
};

class QuotientGraph {
public:
  QuotientGraph(long q, const PolyA& I, int depth = -1);

  long q() const { return q_; }
  const PolyA& I() const { return I_; }
  const FqPtr& field() const { return F_; }
  const P1& p1() const { return p1_; }
  int horizon() const { return N_; }

  const std::vector<QVertex>& vertices() const { return verts_; }
  const std::vector<QEdge>& edges() const { return edges_; }
  const std::vector<QEnd>& ends() const { return ends_; }

  int vertex_index(int level, int root) const;
  int edge_index(int level, int root) const;

  // classification of arbitrary tree data (levels beyond the horizon fail)
  int classify_vertex(const VertexRep& v) const;
  // (edge index, +1 if o(e) is the low-level endpoint)
  std::pair<int, int> classify_edge(const EdgeRep& e) const;

  // orbit id + witness delta in Gamma_0(I) with delta * v = vertices()[id].lift
  std::pair<int, Mat2A> reduce_mod_gamma0(const VertexRep& v) const;

  int betti() const;
  std::vector<std::vector<int>> cycle_basis() const; // lists of signed edge ids (1-based +-)

  // finite-part vertex/edge id lists
  std::vector<int> finite_vertices() const;
  std::vector<int> finite_edges() const;

  std::string dot() const;
  std::string json() const;

private:
  long q_;
  PolyA I_;
  FqPtr F_;
  P1 p1_;
  int N_;
  int degI_;
  std::vector<QVertex> verts_;
  std::vector<QEdge> edges_;
  std::vector<QEnd> ends_;
  // per level: orbit root of each point (vertex partition); edge partition per level
  std::vector<std::vector<int>> vroot_, eroot_;
  // witness machinery: per level, per point: matrix sigma with
  // pt . sigma = root-pt (element of the level group)
  std::vector<std::vector<Mat2A>> vwit_, ewit_;
  std::vector<std::vector<Mat2A>> vgens_, egens_; // level group generators
  Int vgroup_order(int level) const;
  Int egroup_order(int level) const;
  void build();
  int p1_point_of_gamma_inv(const Mat2A& gamma_inv) const;
};

// sanity checks used by tests and the selftest command
struct LiftCheckReport {
  bool ok;
  std::string detail;
};
LiftCheckReport lift_check(const QuotientGraph& g);
LiftCheckReport witness_check(const QuotientGraph& g);

} // namespace dmc
