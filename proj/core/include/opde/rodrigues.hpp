#pragma once

#include <vector>

#include "opde/matrix.hpp"
#include "opde/polynomial.hpp"
#include "opde/weight.hpp"

namespace opde {

/// F_0^{e_0} F_1^{e_1} ... F_k^{e_k} * poly over a fixed factor basis with
/// rational exponents. Closed under partial differentiation.
struct WeightedExpr {
  std::vector<BivariatePoly> basis;
  std::vector<Rational> exponents;
  BivariatePoly poly;
};

/// Basis [x, y, Q_1, ..., Q_k] with the exponents of w and the given poly.
WeightedExpr weighted(const WeightSpec& w, const BivariatePoly& poly);

/// Exact partial derivative. Factors with a nonzero exponent and a nonzero
/// derivative along the axis have their exponent lowered by one and the
/// product rule is cleared into poly; the others are left alone.
WeightedExpr weighted_diff(const WeightedExpr& expr, Axis axis);

/// Divides expr by F_0^{d_0} ... F_k^{d_k} and returns the polynomial left
/// over. Throws NotReducible if a residual exponent is not an integer or a
/// negative residual does not divide poly exactly.
BivariatePoly strip_factors(const WeightedExpr& expr, const std::vector<Rational>& d);

/// (1/rho) d^{n+m}/dx^n dy^m [rho phi10^n phi01^m], normalizing constant 1.
/// Throws NotReducible or DegreeMismatch (result must have degree n+m).
BivariatePoly rodrigues_eval(const WeightSpec& w, const PhiCase& c, int n, int m);

/// (1/rho_rs) d^{n+m-r-s}/dx^{n-r} dy^{m-s} [rho_rs phi10^{n-r} phi01^{m-s}]
/// with rho_rs = phi^{(r,s)} rho. Result has degree n+m-r-s.
BivariatePoly rodrigues_derivative_eval(const WeightSpec& w, const PhiCase& c, int n, int m, int r,
                                        int s);

/// (R_{N,0}, R_{N-1,1}, ..., R_{0,N}) from rodrigues_eval.
PolyVector rodrigues_vector(const WeightSpec& w, const PhiCase& c, int N);

/// The matrix M with v = M * basis, where both vectors have degree N and the
/// leading block of basis is invertible. Throws NotReducible if v is not in
/// the span of basis.
RationalMatrix solve_connection(const PolyVector& v, const PolyVector& basis);

}  // namespace opde
