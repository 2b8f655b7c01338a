#include "opde/weight.hpp"

#include <functional>

#include "opde/errors.hpp"

namespace opde {

namespace {

using P = BivariatePoly;

P lin(const Rational& cx, const Rational& cy, const Rational& c0) {
  return P::from_terms({{1, 0, cx}, {0, 1, cy}, {0, 0, c0}});
}

struct CaseDef {
  const char* id;
  std::function<bool(const HypergeometricPDE&)> applies;
  // Discriminant as printed for the case.
  std::function<P(const HypergeometricPDE&)> printed_alpha;
  // Divisors producing phi10 and phi01 from the discriminant; an absent
  // divisor means the factor is the discriminant itself, a zero divisor means
  // the factor is the constant 1.
  std::function<P(const HypergeometricPDE&)> div10;
  std::function<P(const HypergeometricPDE&)> div01;
};

const P kOne = P(1);
const P kNone;  // zero polynomial: inert factor

std::vector<CaseDef> case_table() {
  const Rational zero(0);
  auto z = [](const Rational& r) { return r.is_zero(); };
  auto one = [](const HypergeometricPDE&) { return kOne; };
  auto none = [](const HypergeometricPDE&) { return kNone; };
  const P X = P::x(), Y = P::y();
  return {
      {"i", [=](const auto& p) { return p.b1 == Rational(2) * p.c3 && p.b2 == Rational(2) * p.b3; },
       [=](const auto& p) {
         const P b = lin(p.b3, p.c3, p.d3) + p.a * (X * Y);
         return -(b * b) + (p.c1 + X * lin(p.a, zero, Rational(2) * p.c3)) *
                               (p.c2 + Y * lin(zero, p.a, Rational(2) * p.b3));
       },
       one, one},
      {"ii",
       [=](const auto& p) {
         return !z(p.c3) && !z(p.d3) && !z(p.b3) && p.a == p.b3 * p.c3 / p.d3 &&
                p.c1 == (p.b1 - p.c3) * p.d3 / p.b3 && p.c2 == (p.b2 - p.b3) * p.d3 / p.c3;
       },
       [=](const auto& p) {
         const P inner = -p.b1 * lin(zero, p.b3 * p.c3, p.b2 * p.d3 - p.b3 * p.d3) +
                         p.c3 * (p.b2 * lin(-p.b3, zero, p.d3) +
                                 Rational(2) * p.b3 * lin(p.b3, p.c3, zero));
         return (-(p.b3 * p.c3 * p.d3).inverse()) *
                (lin(p.b3, zero, p.d3) * lin(zero, p.c3, p.d3) * inner);
       },
       [=](const auto& p) { return lin(zero, p.c3, p.d3); },
       [=](const auto& p) { return lin(p.b3, zero, p.d3); }},
      {"iii", [=](const auto& p) { return z(p.a) && z(p.b1) && z(p.c1) && z(p.c3); },
       [=](const auto& p) { return lin(p.b3, zero, p.d3).pow(2); }, one, none},
      {"iv", [=](const auto& p) { return z(p.a) && z(p.b2) && z(p.b3) && z(p.c2); },
       [=](const auto& p) { return lin(zero, p.c3, p.d3).pow(2); }, none, one},
      {"v", [=](const auto& p) { return z(p.a) && z(p.b3) && z(p.c3) && z(p.d3); },
       [=](const auto& p) { return lin(p.b1, zero, p.c1) * lin(zero, p.b2, p.c2); },
       [=](const auto& p) { return lin(zero, p.b2, p.c2); },
       [=](const auto& p) { return lin(p.b1, zero, p.c1); }},
      {"vi",
       [=](const auto& p) {
         return !z(p.a) && z(p.b3) && z(p.c2) && z(p.d3) && p.c1 == (p.b1 - p.c3) * p.c3 / p.a;
       },
       [=](const auto& p) {
         return p.a.inverse() * (lin(p.a, zero, p.c3) * Y *
                                 (p.b2 * lin(p.a, zero, p.b1 - p.c3) +
                                  p.a * (p.b1 - Rational(2) * p.c3) * Y));
       },
       [=](const auto&) { return Y; }, [=](const auto& p) { return lin(p.a, zero, p.c3); }},
      {"vii",
       [=](const auto& p) {
         return !z(p.c3) && z(p.a) && z(p.b3) && p.b1 == p.c3 && p.c2 == p.b2 * p.d3 / p.c3;
       },
       [=](const auto& p) {
         return p.c3.inverse() * (lin(zero, p.c3, p.d3) * (p.b2 * lin(p.c3, zero, p.c1) -
                                                           p.c3 * lin(zero, p.c3, p.d3)));
       },
       [=](const auto& p) { return lin(zero, p.c3, p.d3); }, one},
      {"viii",
       [=](const auto& p) {
         return !z(p.b3) && z(p.a) && z(p.c3) && p.b2 == p.b3 && p.c1 == p.b1 * p.d3 / p.b3;
       },
       [=](const auto& p) {
         // Transcribed literally, including the "(d3 + b3) x" grouping.
         return p.b3.inverse() *
                (lin(p.b3, zero, p.d3) *
                 (-p.b3 * (p.d3 + p.b3) * X + p.b1 * lin(zero, p.b3, p.c2)));
       },
       one, [=](const auto& p) { return lin(p.b3, zero, p.d3); }},
      {"ix",
       [=](const auto& p) {
         return !z(p.a) && z(p.c1) && z(p.c3) && z(p.d3) && p.c2 == (p.b2 - p.b3) * p.b3 / p.a;
       },
       [=](const auto& p) {
         return p.a.inverse() * (X * lin(zero, p.a, p.b3) *
                                 (p.a * (p.b2 - Rational(2) * p.b3) * X +
                                  p.b1 * lin(zero, p.a, p.b2 - p.b3)));
       },
       [=](const auto& p) { return lin(zero, p.a, p.b3); }, [=](const auto&) { return X; }},
      {"x", [=](const auto& p) { return z(p.c1) && z(p.c2) && z(p.d3) && z(p.b3) && z(p.c3); },
       [=](const auto& p) {
         return X * Y * (p.a * p.b2 * X + p.b1 * lin(zero, p.a, p.b2));
       },
       [=](const auto&) { return Y; }, [=](const auto&) { return X; }},
  };
}

// Rational c with p = c q, if one exists.
std::optional<Rational> scalar_ratio(const P& p, const P& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  const Rational c = p.leading_term().second / q.leading_term().second;
  if (p == c * q) return c;
  return std::nullopt;
}

P factor_from(const P& alpha, const P& divisor, const std::string& id) {
  if (divisor.is_zero()) return P(1);
  if (divisor == kOne) return normalize_factor(alpha);
  try {
    return normalize_factor(exact_divide(alpha, divisor));
  } catch (const NotDivisible&) {
    throw NonPolynomialPhi(id);
  } catch (const DivisionByZeroPoly&) {
    throw NonPolynomialPhi(id);
  }
}

// phi10 rho and phi01 rho must carry the Pearson numerators shifted by
// (1,0) and (0,1): d log phi10 = (alpha_x, omega) / alpha and
// d log phi01 = (theta, alpha_y) / alpha.
bool factor_consistent(const HypergeometricPDE& pde, const P& alpha, const P& phi10,
                       const P& phi01) {
  const P omega = pde.omega(), theta = pde.theta();
  const P ax = alpha.diff(Axis::x), ay = alpha.diff(Axis::y);
  return alpha * phi10.diff(Axis::x) == phi10 * ax && alpha * phi10.diff(Axis::y) == phi10 * omega &&
         alpha * phi01.diff(Axis::x) == phi01 * theta && alpha * phi01.diff(Axis::y) == phi01 * ay;
}

}  // namespace

BivariatePoly normalize_factor(const BivariatePoly& p) {
  if (p.is_zero()) return p;
  return p.trailing_term().second.sign() < 0 ? -p : p;
}

std::vector<PhiCase> classify_phi(const HypergeometricPDE& pde) {
  const P alpha = pde.discriminant();
  if (alpha.is_zero()) throw DegenerateDiscriminant();
  std::vector<PhiCase> out;
  for (const auto& def : case_table()) {
    if (!def.applies(pde)) continue;
    PhiCase c;
    c.id = def.id;
    const P printed = def.printed_alpha(pde);
    if (printed != alpha) {
      if (const auto k = scalar_ratio(printed, alpha)) {
        c.note = "printed discriminant equals " + k->str() + " * (AC - B^2)";
      } else {
        c.note = "printed discriminant " + printed.str() +
                 " disagrees with AC - B^2; the computed discriminant is used";
      }
    }
    c.phi10 = factor_from(alpha, def.div10(pde), c.id);
    c.phi01 = factor_from(alpha, def.div01(pde), c.id);
    c.verified = factor_consistent(pde, alpha, c.phi10, c.phi01);
    if (!c.verified) {
      if (!c.note.empty()) c.note += "; ";
      c.note += "factors fail the shifted Pearson relations for this equation";
    }
    out.push_back(std::move(c));
  }
  if (out.empty()) throw NoCaseMatches();
  return out;
}

PhiCase select_phi(const HypergeometricPDE& pde) {
  for (auto& c : classify_phi(pde)) {
    if (c.verified) return c;
  }
  throw NoCaseMatches("no matching weight-factor case is consistent with the equation");
}

BivariatePoly phi_rs(const PhiCase& c, int r, int s) { return c.phi10.pow(r) * c.phi01.pow(s); }

WeightSpec WeightSpec::times(const BivariatePoly& q, const Rational& w) const {
  WeightSpec out = *this;
  if (!w.is_zero() && q.degree().value_or(0) > 0) out.factors.emplace_back(q, w);
  return out;
}

std::pair<BivariatePoly, BivariatePoly> log_derivative(const WeightSpec& w, Axis axis) {
  // Collect (coefficient * derivative, denominator) pairs, then combine.
  std::vector<std::pair<P, P>> parts;
  if (axis == Axis::x && !w.u.is_zero()) parts.emplace_back(P(w.u), P::x());
  if (axis == Axis::y && !w.v.is_zero()) parts.emplace_back(P(w.v), P::y());
  for (const auto& [q, e] : w.factors) {
    if (q.is_zero()) throw std::invalid_argument("weight factor is the zero polynomial");
    const P dq = q.diff(axis);
    if (e.is_zero() || dq.is_zero()) continue;
    parts.emplace_back(e * dq, q);
  }
  P num, den(1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    P term = parts[i].first;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) term = term * parts[j].second;
    }
    num += term;
    den = den * parts[i].second;
  }
  return {num, den};
}

bool verify_pearson(const HypergeometricPDE& pde, const WeightSpec& w, const PhiCase& c, int r,
                    int s) {
  const P alpha = pde.discriminant();
  if (alpha.is_zero()) throw DegenerateDiscriminant();
  const WeightSpec shifted = w.times(c.phi10, Rational(r)).times(c.phi01, Rational(s));
  const auto [beta, gamma] = pearson_numerators(pde, r, s);
  const auto [nx, dx] = log_derivative(shifted, Axis::x);
  const auto [ny, dy] = log_derivative(shifted, Axis::y);
  return nx * alpha == beta * dx && ny * alpha == gamma * dy;
}

bool verify_pearson(const HypergeometricPDE& pde, const WeightSpec& w, int r, int s) {
  return verify_pearson(pde, w, select_phi(pde), r, s);
}

}  // namespace opde
