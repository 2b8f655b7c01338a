#pragma once

#include <gtest/gtest.h>

#include "opde/matrix.hpp"
#include "opde/pde.hpp"
#include "opde/polynomial.hpp"
#include "opde/rational.hpp"

namespace opde::testing {

inline Rational Q(long n, long d = 1) { return Rational(n, d); }
inline BivariatePoly X() { return BivariatePoly::x(); }
inline BivariatePoly Y() { return BivariatePoly::y(); }
inline BivariatePoly C(long n, long d = 1) { return BivariatePoly(Rational(n, d)); }

inline HypergeometricPDE appell(long alpha, long beta) {
  HypergeometricPDE p;
  p.a = Q(-1);
  p.b1 = Q(1);
  p.b2 = Q(1);
  p.e = -Q(alpha + beta + 1);
  p.f1 = Q(alpha);
  p.f2 = Q(beta);
  return p;
}

/// An equation of the second weight-factor case obtained from the triangle
/// problem by a diagonal affine change of variables.
inline HypergeometricPDE scaled_triangle() {
  HypergeometricPDE g;
  g.a = Q(-1);
  g.b1 = Q(4);
  g.c1 = Q(-3);
  g.b2 = Q(2, 3);
  g.c2 = Q(-1, 12);
  g.b3 = Q(1, 2);
  g.c3 = Q(1);
  g.d3 = Q(-1, 2);
  g.e = Q(-6);
  g.f1 = Q(10);
  g.f2 = Q(2);
  return g;
}

/// Unit disk equation with weight (1 - x^2 - y^2)^{1/2}.
inline HypergeometricPDE disk() {
  HypergeometricPDE d;
  d.a = Q(-1);
  d.c1 = Q(1);
  d.c2 = Q(1);
  d.e = Q(-4);
  return d;
}

inline void expect_zero(const PolyVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_TRUE(v[i].is_zero()) << "entry " << i << ": " << v[i];
}

}  // namespace opde::testing
