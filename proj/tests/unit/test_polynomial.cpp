#include "helpers.hpp"
#include "opde/errors.hpp"
#include "opde/structural.hpp"

namespace opde::testing {
namespace {

TEST(Polynomial, SquareOfSum) {
  const BivariatePoly s = (X() + Y()).pow(2);
  EXPECT_EQ(s, X() * X() + Q(2) * X() * Y() + Y() * Y());
  EXPECT_EQ(s.degree(), 2);
}

TEST(Polynomial, EvaluationAtCentroid) {
  const BivariatePoly p = X() * (C(1) - X() - Y());
  EXPECT_EQ(p.eval(Q(1, 3), Q(1, 3)), Q(1, 9));
}

TEST(Polynomial, ZeroHasNoTermsAndNoDegree) {
  const BivariatePoly z = (X() + C(2)) * BivariatePoly();
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_TRUE((X() - X()).terms().empty());
}

TEST(Polynomial, DegreeIsAdditive) {
  const BivariatePoly p = X() * X() * Y() + C(3);
  const BivariatePoly q = Y() - C(1, 2);
  EXPECT_EQ((p * q).degree(), 4);
}

TEST(Polynomial, PartialDerivatives) {
  EXPECT_EQ((X() * X() * Y()).diff(Axis::x), Q(2) * X() * Y());
  EXPECT_TRUE((X() * X()).diff(Axis::y).is_zero());
}

TEST(Polynomial, DerivativeOfMonomialVectorMatchesMatrixAction) {
  for (int n = 1; n <= 5; ++n) {
    for (Axis a : kAxes) {
      expect_zero(diff(monomial_vector(n), a) - derivative_matrix(n, a) * monomial_vector(n - 1));
    }
  }
}

TEST(Polynomial, ExactDivision) {
  EXPECT_EQ(exact_divide(X() * X() - Y() * Y(), X() - Y()), X() + Y());
  EXPECT_EQ(exact_divide(X() * (C(1) - X() - Y()), X()), C(1) - X() - Y());
  EXPECT_THROW(exact_divide(X() + C(1), Y()), NotDivisible);
  EXPECT_THROW(exact_divide(X(), BivariatePoly()), DivisionByZeroPoly);
  EXPECT_TRUE(divides(C(1) - X(), (C(1) - X()).pow(3) * Y()));
}

TEST(Polynomial, Compose) {
  const BivariatePoly p = X() * Y() + X();
  EXPECT_EQ(p.compose(Y(), X()), X() * Y() + Y());
  EXPECT_EQ(p.compose(Q(2) * X() - C(1), Y()), Q(2) * X() * Y() - Y() + Q(2) * X() - C(1));
}

TEST(Polynomial, LeadingAndTrailingTerms) {
  const BivariatePoly p = X() * X() - Q(3) * X() * Y() + Q(5) * Y() - C(7);
  EXPECT_EQ(p.leading_term().second, Q(-3));
  EXPECT_EQ(p.leading_term().first.y, 1);
  EXPECT_EQ(p.trailing_term().second, Q(-7));
  EXPECT_EQ(p.homogeneous_part(2), X() * X() - Q(3) * X() * Y());
}

TEST(Polynomial, StringForm) {
  EXPECT_EQ((X() * X() - Q(1, 3) * Y() + C(2)).str(), "x^2 - 1/3*y + 2");
  EXPECT_EQ(BivariatePoly().str(), "0");
}

}  // namespace
}  // namespace opde::testing
