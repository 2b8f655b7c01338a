#include "helpers.hpp"

namespace opde::testing {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational::parse(" -10/4 ").str(), "-5/2");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("abc"), std::exception);
  EXPECT_THROW(Rational::parse(""), std::exception);
}

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(Q(1, 3) + Q(1, 6), Q(1, 2));
  EXPECT_EQ(Q(2, 3) * Q(9, 4), Q(3, 2));
  EXPECT_EQ(Q(1) / Q(3) * Q(3), Q(1));
  EXPECT_THROW(Q(1) / Q(0), std::domain_error);
  EXPECT_LT(Q(-1, 2), Q(1, 3));
}

TEST(Rational, Pochhammer) {
  EXPECT_EQ(pochhammer(Q(1), 3), Q(6));
  EXPECT_EQ(pochhammer(Q(5, 7), 0), Q(1));
  EXPECT_EQ(pochhammer(Q(1, 2), 2), Q(3, 4));
  EXPECT_EQ(pochhammer(Q(-2), 3), Q(0));
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), Q(1));
  EXPECT_EQ(factorial(6), Q(720));
  EXPECT_EQ(binomial(6, 2), Q(15));
  EXPECT_EQ(binomial(4, 5), Q(0));
}

TEST(Rational, LargeValuesStayExact) {
  const Rational big = factorial(40) / factorial(38);
  EXPECT_EQ(big, Q(40 * 39));
}

}  // namespace
}  // namespace opde::testing
