#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opde/pde.hpp"
#include "opde/polynomial.hpp"

namespace opde {

/// One of the ten closed-form weight-factor cases, with phi^{(r,s)} =
/// phi10^r * phi01^s. Each factor is scaled so its lowest-order term is
/// positive.
struct PhiCase {
  std::string id;  // roman numeral "i" .. "x"
  BivariatePoly phi10;
  BivariatePoly phi01;
  /// True when phi10 and phi01 satisfy the shifted Pearson relations for this
  /// equation; false flags a case whose closed form does not hold here.
  bool verified = false;
  /// Diagnostic, e.g. a printed discriminant that differs from A C - B^2.
  std::string note;
};

/// Every case whose coefficient conditions the equation satisfies. Throws
/// DegenerateDiscriminant when alpha vanishes identically, NoCaseMatches when
/// no case applies and NonPolynomialPhi if a factor quotient is not exact.
std::vector<PhiCase> classify_phi(const HypergeometricPDE& pde);

/// First verified case from classify_phi; throws NoCaseMatches if none.
PhiCase select_phi(const HypergeometricPDE& pde);

BivariatePoly phi_rs(const PhiCase& c, int r, int s);

/// phi_j for the structure relations: phi10 for axis x, phi01 for axis y.
inline const BivariatePoly& phi_axis(const PhiCase& c, Axis a) {
  return a == Axis::x ? c.phi10 : c.phi01;
}

/// Scales p so its lowest-order term has a positive coefficient.
BivariatePoly normalize_factor(const BivariatePoly& p);

/// rho = x^u y^v prod Q_i^{w_i}.
struct WeightSpec {
  Rational u;
  Rational v;
  std::vector<std::pair<BivariatePoly, Rational>> factors;

  /// The same weight multiplied by q^w.
  WeightSpec times(const BivariatePoly& q, const Rational& w) const;
};

/// (num, den) with (d rho / d x_axis) / rho = num / den, over the product of
/// the denominators that actually occur (not reduced).
std::pair<BivariatePoly, BivariatePoly> log_derivative(const WeightSpec& w, Axis axis);

/// Checks both Pearson equations for phi^{(r,s)} rho exactly, using the given
/// case for phi. Throws DegenerateDiscriminant.
bool verify_pearson(const HypergeometricPDE& pde, const WeightSpec& w, const PhiCase& c, int r,
                    int s);

/// As above with the case chosen by select_phi.
bool verify_pearson(const HypergeometricPDE& pde, const WeightSpec& w, int r, int s);

}  // namespace opde
