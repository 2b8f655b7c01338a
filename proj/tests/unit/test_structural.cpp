#include "helpers.hpp"
#include "opde/errors.hpp"
#include "opde/structural.hpp"

namespace opde::testing {
namespace {

TEST(Structural, ShiftMatrices) {
  EXPECT_EQ(shift_matrix(0, Axis::x), (RationalMatrix{{Q(1), Q(0)}}));
  EXPECT_EQ(shift_matrix(1, Axis::y), (RationalMatrix{{Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}}));
}

TEST(Structural, ShiftActsAsMultiplication) {
  for (int n = 0; n <= 6; ++n) {
    for (Axis a : kAxes) {
      expect_zero(shift_matrix(n, a) * monomial_vector(n + 1) -
                  BivariatePoly::var(a) * monomial_vector(n));
    }
  }
}

TEST(Structural, ShiftRowsAreOrthonormalAndCommute) {
  for (int n = 0; n <= 6; ++n) {
    for (Axis a : kAxes) {
      EXPECT_EQ(shift_matrix(n, a) * shift_matrix(n, a).transpose(), RationalMatrix::identity(n + 1));
    }
    EXPECT_EQ(shift_matrix(n, Axis::y) * shift_matrix(n + 1, Axis::x),
              shift_matrix(n, Axis::x) * shift_matrix(n + 1, Axis::y));
  }
}

TEST(Structural, DerivativeMatrices) {
  EXPECT_EQ(derivative_matrix(2, Axis::x), (RationalMatrix{{Q(2), Q(0)}, {Q(0), Q(1)}, {Q(0), Q(0)}}));
  EXPECT_EQ(derivative_matrix(2, Axis::y), (RationalMatrix{{Q(0), Q(0)}, {Q(1), Q(0)}, {Q(0), Q(2)}}));
  EXPECT_EQ(derivative_matrix(1, Axis::x), (RationalMatrix{{Q(1)}, {Q(0)}}));
  EXPECT_THROW(derivative_matrix(0, Axis::x), std::invalid_argument);
}

TEST(Structural, JointLeftInverse) {
  EXPECT_EQ(joint_left_inverse(0), RationalMatrix::identity(2));
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(joint_left_inverse(n) * joint_shift_matrix(n), RationalMatrix::identity(n + 2));
    EXPECT_EQ(joint_shift_matrix(n).rank(), static_cast<std::size_t>(n + 2));
  }
  const RationalMatrix d = joint_left_inverse(3);
  // x^2 y^2 appears as y * x^2 y (row 2 of the x block) and x * x y^2 (row 1 of the y block).
  EXPECT_EQ(d(2, 2), Q(1, 2));
  EXPECT_EQ(d(2, 4 + 1), Q(1, 2));
  EXPECT_EQ(d(0, 0), Q(1));
}

TEST(Structural, ExpansionOfMonicDegreeOne) {
  const PolyVector v{X() - C(1, 3), Y() - C(1, 3)};
  const auto G = expansion_matrices(v, 1);
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(G[1], RationalMatrix::identity(2));
  EXPECT_EQ(G[0], (RationalMatrix{{Q(-1, 3)}, {Q(-1, 3)}}));
}

TEST(Structural, ExpansionOfMonomialsAndRoundTrip) {
  const auto G = expansion_matrices(monomial_vector(2), 2);
  EXPECT_EQ(G[2], RationalMatrix::identity(3));
  EXPECT_TRUE(G[1].is_zero());
  EXPECT_TRUE(G[0].is_zero());

  const PolyVector v{X() * Y() - Q(2) * X() + C(5), Y() * Y() * Q(1, 7), C(-1), X() * X() - Y()};
  EXPECT_EQ(reconstruct(expansion_matrices(v, 2)), v);
  EXPECT_EQ(reconstruct(expansion_matrices(v, 4)), v);
  EXPECT_THROW(expansion_matrices(v, 1), DegreeOverflow);
}

TEST(Structural, FamilyBoundaryShapes) {
  const VectorFamily fam({{C(1)}, {X() - C(1, 3), Y() - C(1, 3)}});
  EXPECT_TRUE(fam[-1].empty());
  EXPECT_EQ(fam.G(-1, 0).rows(), 0u);
  EXPECT_EQ(fam.G(-1, 0).cols(), 1u);
  EXPECT_EQ(fam.G(1, -1).rows(), 2u);
  EXPECT_EQ(fam.G(1, -1).cols(), 0u);
  EXPECT_EQ(fam.G(1, 0), (RationalMatrix{{Q(-1, 3)}, {Q(-1, 3)}}));
}

}  // namespace
}  // namespace opde::testing
