#pragma once

#include <optional>

#include "opde/matrix.hpp"
#include "opde/pde.hpp"
#include "opde/polynomial.hpp"
#include "opde/rational.hpp"
#include "opde/weight.hpp"

namespace opde {

/// Parameters of the weight x^{alpha-1} y^{beta-1} on the triangle
/// x > 0, y > 0, x + y < 1.
struct AppellParams {
  Rational alpha;
  Rational beta;

  /// Throws std::invalid_argument unless both parameters are positive.
  void validate() const;
};

HypergeometricPDE appell_pde(const AppellParams& p);

/// The parameters if pde is exactly appell_pde of some positive alpha, beta.
std::optional<AppellParams> appell_params_of(const HypergeometricPDE& pde);

/// x^{alpha-1} y^{beta-1}, no extra factors.
WeightSpec appell_weight(const AppellParams& p);

/// Normalized moment L[x^i y^j], with L[1] = 1.
Rational moment(const AppellParams& p, int i, int j);

/// L[q] by linearity.
Rational apply_functional(const AppellParams& p, const BivariatePoly& q);

/// L[x^m P^T] as an (m+1) x (P.size()) matrix, rows indexed by the monomials
/// x^{m-k} y^k.
RationalMatrix orthogonality_blocks(const AppellParams& p, const PolyVector& P, int m);

/// Monic Appell polynomial with leading monomial x^n y^m, from its terminating
/// double hypergeometric sum.
BivariatePoly monic_appell_series(const AppellParams& p, int n, int m);

/// (A_{N,0}, A_{N-1,1}, ..., A_{0,N}) from monic_appell_series.
PolyVector monic_appell_vector(const AppellParams& p, int N);

/// Connection matrix with F_N = G^F A_N.
RationalMatrix connection_F(const AppellParams& p, int n);

/// Non-monic Appell polynomial from its Rodrigues formula, scaled by
/// 1 / ((alpha)_n (beta)_m).
BivariatePoly nonmonic_F(const AppellParams& p, int n, int m);

/// (F_{N,0}, F_{N-1,1}, ..., F_{0,N}).
PolyVector nonmonic_F_vector(const AppellParams& p, int N);

/// Classical Jacobi polynomial P_n^{(a,b)} as a polynomial in x.
BivariatePoly jacobi(const Rational& a, const Rational& b, int n);

/// P_n^{(2m+beta, alpha-1)}(2x-1) (1-x)^m P_m^{(0, beta-1)}(2y/(1-x) - 1),
/// expanded exactly.
BivariatePoly koornwinder(const AppellParams& p, int n, int m);

/// (K_{N,0}, K_{N-1,1}, ..., K_{0,N}).
PolyVector koornwinder_vector(const AppellParams& p, int N);

/// Lower-triangular connection matrix with K_N = G^K A_N.
RationalMatrix connection_K(const AppellParams& p, int n);

}  // namespace opde
