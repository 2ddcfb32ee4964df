#pragma once

#include <gmpxx.h>

#include <string>

namespace dmc {

using Rat = mpq_class;
using Int = mpz_class;

// Field trait hooks used by the templated polynomial / matrix code.
// A scalar type K must provide: default ctor (zero), +,-,*,/,==, unary -,
// and specializations below.
template <class K>
struct FieldOps {
  static K zero() { return K(0); }
  static K one() { return K(1); }
  static K from_rat(const Rat& r) { return K(r); }
  static bool is_zero(const K& x) { return x == K(0); }
  static std::string str(const K& x);
};

template <>
inline std::string FieldOps<Rat>::str(const Rat& x) {
  return x.get_str();
}

inline Rat rat_pow(const Rat& x, long e) {
  Rat r = 1, b = x;
  long n = e < 0 ? -e : e;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  if (e < 0) r = 1 / r;
  return r;
}

inline Int int_pow(long b, long e) {
  Int r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

} // namespace dmc
