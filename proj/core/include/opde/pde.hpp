#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "opde/polynomial.hpp"
#include "opde/rational.hpp"

namespace opde {

/// Second-order PDE of hypergeometric type
///
///   A u_xx + 2 B u_xy + C u_yy + (e x + f1) u_x + (e y + f2) u_y + lambda_n u = 0
///
/// with A = a x^2 + b1 x + c1, B = a x y + b3 x + c3 y + d3,
/// C = a y^2 + b2 y + c2. The factor 2 on the mixed term is applied by the
/// operator; d3 and friends are stored as they appear inside B.
struct HypergeometricPDE {
  Rational a, b1, c1, b2, c2, b3, c3, d3, e, f1, f2;

  static constexpr std::array<std::string_view, 11> kNames = {
      "a", "b1", "c1", "b2", "c2", "b3", "c3", "d3", "e", "f1", "f2"};

  /// Field by name; throws std::invalid_argument for unknown names.
  Rational& field(std::string_view name);
  const Rational& field(std::string_view name) const;

  BivariatePoly A() const;
  BivariatePoly B() const;
  BivariatePoly C() const;

  /// a*k + e.
  Rational varpi(long k) const { return a * Rational(k) + e; }
  /// lambda_n = -n((n-1)a + e).
  Rational eigenvalue(int n) const;
  /// alpha = A C - B^2.
  BivariatePoly discriminant() const;
  /// 2 A B_x - B A_x.
  BivariatePoly omega() const;
  /// 2 C B_y - B C_y.
  BivariatePoly theta() const;

  /// Smallest k >= 0 with a*k + e = 0, if any.
  std::optional<long> first_vanishing_varpi() const;

  friend bool operator==(const HypergeometricPDE&, const HypergeometricPDE&) = default;
};

/// varpi_k for k = 0..2*n_max. Throws NotAdmissible naming the first k with
/// varpi_k = 0, including vanishing indices beyond the prefix.
std::vector<Rational> check_admissible(const HypergeometricPDE& pde, int n_max);

/// Pearson numerators (beta^{(r,s)}, gamma^{(r,s)}).
std::pair<BivariatePoly, BivariatePoly> pearson_numerators(const HypergeometricPDE& pde, int r,
                                                           int s);

/// Cross-multiplied self-adjointness test
///   gamma_x alpha - gamma alpha_x == beta_y alpha - beta alpha_y
/// on the shifted numerators. Throws DegenerateDiscriminant if alpha = 0.
bool is_potentially_self_adjoint(const HypergeometricPDE& pde, int r = 0, int s = 0);

/// Equation satisfied by the (r, s) partial derivative of a degree-n solution.
struct DerivedEquation {
  HypergeometricPDE pde;
  int r = 0;
  int s = 0;
  int n = 0;
  BivariatePoly tau_x;
  BivariatePoly tau_y;
  Rational mu;
};

DerivedEquation derived_pde(const HypergeometricPDE& pde, int r, int s, int n);

/// D^{(r,s)} p + mu p.
BivariatePoly apply_operator(const DerivedEquation& eq, const BivariatePoly& p);

/// Residual of the base equation at eigenvalue lambda_n.
BivariatePoly pde_residual(const HypergeometricPDE& pde, int n, const BivariatePoly& p);

}  // namespace opde
