#pragma once

#include "dmc/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace dmc {

// Dense matrix over an exact field. Desk-scale dimensions; plain Gaussian
// elimination with first-nonzero pivoting (any nonzero pivot is exact).
template <class K>
class Mat {
public:
  Mat() = default;
  Mat(int r, int c) : r_(r), c_(c), a_(r * c, FieldOps<K>::zero()) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = FieldOps<K>::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  K& operator()(int i, int j) { return a_[i * c_ + j]; }
  const K& operator()(int i, int j) const { return a_[i * c_ + j]; }

  Mat operator*(const Mat& o) const {
    Mat r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        if (FieldOps<K>::is_zero((*this)(i, k))) continue;
        for (int j = 0; j < o.c_; ++j)
          r(i, j) = r(i, j) + (*this)(i, k) * o(k, j);
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
    return r;
  }
  Mat scaled(const K& x) const {
    Mat r = *this;
    for (auto& v : r.a_) v = v * x;
    return r;
  }
  bool operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    std::vector<K> r(r_, FieldOps<K>::zero());
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!FieldOps<K>::is_zero(a_[i * c_ + j])) r[i] = r[i] + a_[i * c_ + j] * v[j];
    return r;
  }

private:
  int r_ = 0, c_ = 0;
  std::vector<K> a_;
};

// Row-reduce in place; returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!FieldOps<K>::is_zero(m(i, col))) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    K inv = FieldOps<K>::one() / m(row, col);
    for (int j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || FieldOps<K>::is_zero(m(i, col))) continue;
      K f = m(i, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of the right nullspace, as columns.
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> m) {
  int n = m.cols();
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<K>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<K> v(n, FieldOps<K>::zero());
    v[free] = FieldOps<K>::one();
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m((int)r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
int rank(Mat<K> m) {
  return (int)rref(m).size();
}

// Solve m x = b; returns false if inconsistent. Free variables set to zero.
template <class K>
bool solve(Mat<K> m, std::vector<K> b, std::vector<K>& x) {
  int R = m.rows(), C = m.cols();
  Mat<K> aug(R, C + 1);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[i];
  }
  std::vector<int> piv = rref(aug);
  for (int c : piv)
    if (c == C) return false;
  x.assign(C, FieldOps<K>::zero());
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug((int)r, C);
  return true;
}

// Characteristic polynomial via Faddeev-LeVerrier (needs char 0 scalars).
template <class K>
std::vector<K> charpoly(const Mat<K>& a) {
  int n = a.rows();
  std::vector<K> c(n + 1, FieldOps<K>::zero());
  c[n] = FieldOps<K>::one();
  Mat<K> m(n, n); // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Mat<K> am = a * m;
    for (int i = 0; i < n; ++i) am(i, i) = am(i, i) + c[n - k + 1];
    m = am;
    Mat<K> prod = a * m;
    K tr = FieldOps<K>::zero();
    for (int i = 0; i < n; ++i) tr = tr + prod(i, i);
    c[n - k] = -(tr / FieldOps<K>::from_rat(Rat(k)));
  }
  return c; // c[0] + c[1] x + ... + c[n] x^n = det(xI - A)
}

} // namespace dmc
