#include "opde/pde.hpp"

#include <stdexcept>
#include <string>

#include "opde/errors.hpp"

namespace opde {

namespace {

using P = BivariatePoly;

template <typename Self>
auto& field_of(Self& pde, std::string_view name) {
  if (name == "a") return pde.a;
  if (name == "b1") return pde.b1;
  if (name == "c1") return pde.c1;
  if (name == "b2") return pde.b2;
  if (name == "c2") return pde.c2;
  if (name == "b3") return pde.b3;
  if (name == "c3") return pde.c3;
  if (name == "d3") return pde.d3;
  if (name == "e") return pde.e;
  if (name == "f1") return pde.f1;
  if (name == "f2") return pde.f2;
  throw std::invalid_argument("unknown coefficient '" + std::string(name) + "'");
}

}  // namespace

Rational& HypergeometricPDE::field(std::string_view name) { return field_of(*this, name); }
const Rational& HypergeometricPDE::field(std::string_view name) const {
  return field_of(*this, name);
}

BivariatePoly HypergeometricPDE::A() const {
  return P::from_terms({{2, 0, a}, {1, 0, b1}, {0, 0, c1}});
}

BivariatePoly HypergeometricPDE::B() const {
  return P::from_terms({{1, 1, a}, {1, 0, b3}, {0, 1, c3}, {0, 0, d3}});
}

BivariatePoly HypergeometricPDE::C() const {
  return P::from_terms({{0, 2, a}, {0, 1, b2}, {0, 0, c2}});
}

Rational HypergeometricPDE::eigenvalue(int n) const {
  return -Rational(n) * (Rational(n - 1) * a + e);
}

BivariatePoly HypergeometricPDE::discriminant() const {
  const P b = B();
  return A() * C() - b * b;
}

BivariatePoly HypergeometricPDE::omega() const {
  const P A_ = A(), B_ = B();
  return Rational(2) * (A_ * B_.diff(Axis::x)) - B_ * A_.diff(Axis::x);
}

BivariatePoly HypergeometricPDE::theta() const {
  const P C_ = C(), B_ = B();
  return Rational(2) * (C_ * B_.diff(Axis::y)) - B_ * C_.diff(Axis::y);
}

std::optional<long> HypergeometricPDE::first_vanishing_varpi() const {
  if (a.is_zero()) {
    if (e.is_zero()) return 0L;
    return std::nullopt;
  }
  const Rational k = -e / a;
  if (k.is_integer() && k.sign() >= 0) return k.to_long();
  return std::nullopt;
}

std::vector<Rational> check_admissible(const HypergeometricPDE& pde, int n_max) {
  if (n_max < 0) throw std::invalid_argument("check_admissible: negative degree bound");
  if (const auto k = pde.first_vanishing_varpi()) throw NotAdmissible(*k);
  std::vector<Rational> out;
  out.reserve(2 * n_max + 1);
  for (int k = 0; k <= 2 * n_max; ++k) out.push_back(pde.varpi(k));
  return out;
}

std::pair<BivariatePoly, BivariatePoly> pearson_numerators(const HypergeometricPDE& pde, int r,
                                                           int s) {
  const Rational& a = pde.a;
  const Rational& e = pde.e;
  const P A = pde.A(), B = pde.B(), C = pde.C();
  const P lx = P::from_terms({{1, 0, e - Rational(3) * a}, {0, 0, pde.f1 - pde.b1 - pde.c3}});
  const P ly = P::from_terms({{0, 1, e - Rational(3) * a}, {0, 0, pde.f2 - pde.b2 - pde.b3}});
  P beta = lx * C - ly * B;
  P gamma = ly * A - lx * B;
  if (r != 0 || s != 0) {
    const P alpha = pde.discriminant();
    beta += Rational(r) * alpha.diff(Axis::x) + Rational(s) * pde.theta();
    gamma += Rational(r) * pde.omega() + Rational(s) * alpha.diff(Axis::y);
  }
  return {beta, gamma};
}

bool is_potentially_self_adjoint(const HypergeometricPDE& pde, int r, int s) {
  const P alpha = pde.discriminant();
  if (alpha.is_zero()) throw DegenerateDiscriminant();
  const auto [beta, gamma] = pearson_numerators(pde, r, s);
  const P lhs = gamma.diff(Axis::x) * alpha - gamma * alpha.diff(Axis::x);
  const P rhs = beta.diff(Axis::y) * alpha - beta * alpha.diff(Axis::y);
  return lhs == rhs;
}

DerivedEquation derived_pde(const HypergeometricPDE& pde, int r, int s, int n) {
  if (r < 0 || s < 0) throw std::invalid_argument("derived_pde: negative derivative order");
  DerivedEquation eq;
  eq.pde = pde;
  eq.r = r;
  eq.s = s;
  eq.n = n;
  const Rational rs(r + s);
  const Rational lead = pde.e + Rational(2) * pde.a * rs;
  eq.tau_x = P::from_terms(
      {{1, 0, lead}, {0, 0, pde.f1 + Rational(r) * pde.b1 + Rational(2 * s) * pde.c3}});
  eq.tau_y = P::from_terms(
      {{0, 1, lead}, {0, 0, pde.f2 + Rational(2 * r) * pde.b3 + Rational(s) * pde.b2}});
  eq.mu = pde.eigenvalue(n) + rs * pde.e + rs * Rational(r + s - 1) * pde.a;
  return eq;
}

BivariatePoly apply_operator(const DerivedEquation& eq, const BivariatePoly& p) {
  if (p.is_zero()) return {};
  const P px = p.diff(Axis::x), py = p.diff(Axis::y);
  P out = eq.pde.A() * px.diff(Axis::x);
  out += Rational(2) * (eq.pde.B() * px.diff(Axis::y));
  out += eq.pde.C() * py.diff(Axis::y);
  out += eq.tau_x * px;
  out += eq.tau_y * py;
  out += eq.mu * p;
  return out;
}

BivariatePoly pde_residual(const HypergeometricPDE& pde, int n, const BivariatePoly& p) {
  return apply_operator(derived_pde(pde, 0, 0, n), p);
}

}  // namespace opde
