#include "helpers.hpp"
#include "opde/appell.hpp"
#include "opde/errors.hpp"
#include "opde/monic.hpp"
#include "opde/rodrigues.hpp"

namespace opde::testing {
namespace {

bool proportional(const BivariatePoly& p, const BivariatePoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const int d = std::max(p.degree().value_or(0), q.degree().value_or(0));
  for (int k = 0; k <= d; ++k) {
    for (int j = 0; j <= k; ++j) {
      const Rational& c = q.coeff(k - j, j);
      if (c != 0) return p == (p.coeff(k - j, j) / c) * q;
    }
  }
  return false;
}

WeightSpec triangle_weight() {
  return WeightSpec{Q(0), Q(0), {{C(1) - X(), Q(1)}, {C(1) - Q(2) * Y(), Q(2)}}};
}

TEST(Rodrigues, WeightedDiffProductRule) {
  const BivariatePoly t = C(1) - X() - Y();
  const WeightedExpr e{{X(), Y(), t}, {Q(5, 2), Q(0), Q(3, 2)}, C(1)};
  const WeightedExpr dx = weighted_diff(e, Axis::x);
  EXPECT_EQ(dx.exponents[0], Q(3, 2));
  EXPECT_EQ(dx.exponents[1], Q(0));
  EXPECT_EQ(dx.exponents[2], Q(1, 2));
  EXPECT_EQ(dx.poly, Q(5, 2) * t - Q(3, 2) * X());

  const WeightedExpr dy = weighted_diff(e, Axis::y);
  EXPECT_EQ(dy.exponents[0], Q(5, 2));
  EXPECT_EQ(dy.exponents[2], Q(1, 2));
  EXPECT_EQ(dy.poly, C(-3, 2));
}

TEST(Rodrigues, WeightedDiffOfPlainPolynomial) {
  const WeightedExpr e{{X(), Y()}, {Q(0), Q(0)}, X() * X() * Y()};
  const WeightedExpr d = weighted_diff(e, Axis::x);
  EXPECT_EQ(d.exponents, (std::vector<Rational>{Q(0), Q(0)}));
  EXPECT_EQ(d.poly, Q(2) * X() * Y());
}

TEST(Rodrigues, StripFactors) {
  const BivariatePoly t = C(1) - X() - Y();
  const WeightedExpr e{{X(), Y(), t}, {Q(3), Q(1, 2), Q(0)}, t};
  EXPECT_EQ(strip_factors(e, {Q(1), Q(1, 2), Q(0)}), X() * X() * t);
  EXPECT_EQ(strip_factors(e, {Q(0), Q(1, 2), Q(1)}), X().pow(3));
  EXPECT_THROW(strip_factors(e, {Q(0), Q(0), Q(0)}), NotReducible);
  EXPECT_THROW(strip_factors(e, {Q(3), Q(1, 2), Q(2)}), NotReducible);
}

TEST(Rodrigues, AppellLowDegrees) {
  const AppellParams p{Q(1), Q(1)};
  const WeightSpec w = appell_weight(p);
  const PhiCase c = select_phi(appell(1, 1));
  EXPECT_EQ(rodrigues_eval(w, c, 0, 0), C(1));
  EXPECT_EQ(rodrigues_eval(w, c, 1, 0), C(1) - Q(2) * X() - Y());
  EXPECT_EQ(rodrigues_eval(w, c, 0, 1), C(1) - X() - Q(2) * Y());
}

TEST(Rodrigues, ConnectsToMonicFamily) {
  for (auto [a, b] : {std::pair{1L, 1L}, std::pair{2L, 3L}, std::pair{2L, 1L}}) {
    const AppellParams p{Q(a), Q(b)};
    const HypergeometricPDE pde = appell(a, b);
    const MonicFamily fam = build_monic(pde, 5);
    const PhiCase c = select_phi(pde);
    for (int n = 1; n <= 4; ++n) {
      const PolyVector r = rodrigues_vector(appell_weight(p), c, n);
      const RationalMatrix M = solve_connection(r, fam.family[n]);
      EXPECT_TRUE(is_zero(r - M * fam.family[n]));
      for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_TRUE(pde_residual(pde, n, r[i]).is_zero());
      }
    }
  }
}

TEST(Rodrigues, DerivativeForms) {
  const HypergeometricPDE pde = appell(2, 3);
  const WeightSpec w = appell_weight(AppellParams{Q(2), Q(3)});
  const PhiCase c = select_phi(pde);
  const BivariatePoly r1 = rodrigues_derivative_eval(w, c, 1, 0, 1, 0);
  ASSERT_EQ(r1.degree(), 0);
  EXPECT_FALSE(r1.is_zero());

  EXPECT_TRUE(proportional(rodrigues_derivative_eval(w, c, 2, 0, 1, 0),
                           rodrigues_eval(w, c, 2, 0).diff(Axis::x)));
  EXPECT_TRUE(proportional(rodrigues_derivative_eval(w, c, 0, 3, 0, 2),
                           rodrigues_eval(w, c, 0, 3).diff(Axis::y).diff(Axis::y)));
  EXPECT_FALSE(proportional(rodrigues_derivative_eval(w, c, 1, 1, 1, 0),
                            rodrigues_eval(w, c, 1, 1).diff(Axis::x)));
  for (int r = 0; r <= 2; ++r) {
    for (int s = 0; s <= 1; ++s) {
      const BivariatePoly d = rodrigues_derivative_eval(w, c, 2, 1, r, s);
      EXPECT_EQ(d.degree(), 3 - r - s);
      EXPECT_TRUE(apply_operator(derived_pde(pde, r, s, 3), d).is_zero()) << r << " " << s;
    }
  }
}

TEST(Rodrigues, SecondCaseWeight) {
  const HypergeometricPDE g = scaled_triangle();
  const PhiCase c = select_phi(g);
  const MonicFamily fam = build_monic(g, 4);
  for (int n = 0; n <= 3; ++n) {
    const PolyVector r = rodrigues_vector(triangle_weight(), c, n);
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_EQ(r[i].degree(), n);
      EXPECT_TRUE(pde_residual(g, n, r[i]).is_zero());
    }
    EXPECT_NO_THROW(solve_connection(r, fam.family[n]));
  }
}

TEST(Rodrigues, SolveConnectionRejectsOutsideSpan) {
  const PolyVector basis{X(), Y()};
  EXPECT_EQ(solve_connection({X() + Y(), Q(2) * Y()}, basis),
            (RationalMatrix{{Q(1), Q(1)}, {Q(0), Q(2)}}));
  EXPECT_THROW(solve_connection({X() + C(1), Y()}, basis), NotReducible);
  EXPECT_THROW(solve_connection({X(), Y()}, {X(), Q(2) * X()}), NotReducible);
}

TEST(Rodrigues, WrongWeightIsDetected) {
  const PhiCase c = select_phi(appell(1, 1));
  const WeightSpec bad{Q(0), Q(0), {{C(1) - X() - Y(), Q(1, 2)}}};
  bool raised = false;
  try {
    for (int n = 1; n <= 3; ++n) {
      const BivariatePoly r = rodrigues_eval(bad, c, n, 0);
      if (!pde_residual(appell(1, 1), n, r).is_zero()) raised = true;
    }
  } catch (const Error&) {
    raised = true;
  }
  EXPECT_TRUE(raised);
}

}  // namespace
}  // namespace opde::testing
