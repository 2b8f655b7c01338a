#include "helpers.hpp"
#include "opde/appell.hpp"
#include "opde/errors.hpp"
#include "opde/monic.hpp"
#include "opde/relations.hpp"

namespace opde::testing {
namespace {

const VectorFamily& monic_family(int which) {
  static const MonicFamily a11 = build_monic(appell(1, 1), 9);
  static const MonicFamily a23 = build_monic(appell(2, 3), 9);
  static const MonicFamily g = build_monic(scaled_triangle(), 8);
  static const MonicFamily d = build_monic(disk(), 8);
  switch (which) {
    case 0: return a11.family;
    case 1: return a23.family;
    case 2: return g.family;
    default: return d.family;
  }
}

HypergeometricPDE pde_of(int which) {
  switch (which) {
    case 0: return appell(1, 1);
    case 1: return appell(2, 3);
    case 2: return scaled_triangle();
    default: return disk();
  }
}

class Identities : public ::testing::TestWithParam<int> {};

TEST_P(Identities, TtrrIdentityAndMonicClosedForm) {
  const VectorFamily& fam = monic_family(GetParam());
  for (int n = 0; n <= 7; ++n) {
    const TtrrSet t = general_ttrr(fam, n);
    const TtrrSet m = monic_ttrr(pde_of(GetParam()), n);
    for (Axis a : kAxes) {
      expect_zero(ttrr_residual(fam, t, a));
      const std::size_t s = slot(a);
      EXPECT_EQ(t.A[s], shift_matrix(n, a));
      EXPECT_EQ(t.B[s], m.B[s]) << "n=" << n;
      EXPECT_EQ(t.C[s], m.C[s]) << "n=" << n;
    }
  }
}

TEST_P(Identities, DerivativeFamilyRecurrence) {
  const VectorFamily& fam = monic_family(GetParam());
  for (Axis a : kAxes) {
    const VectorFamily q = derivative_family(fam, a);
    for (int n = 0; n + 1 <= q.max_degree(); ++n) {
      const TtrrSet t = derivative_ttrr(fam, n);
      const std::size_t s = slot(a);
      EXPECT_EQ(t.A[s].rows(), static_cast<std::size_t>(n + 1));
      EXPECT_EQ(t.A[s].cols(), static_cast<std::size_t>(n + 2));
      EXPECT_EQ(t.C[s].cols(), static_cast<std::size_t>(n));
      expect_zero(ttrr_residual(q, t, a));
    }
  }
}

TEST_P(Identities, StructureIdentity) {
  const VectorFamily& fam = monic_family(GetParam());
  const PhiCase phi = select_phi(pde_of(GetParam()));
  for (int n = 1; n <= 7; ++n) {
    const StructureSet st = structure_matrices(fam, phi, n);
    for (Axis a : kAxes) expect_zero(structure_residual(fam, st, phi, a));
  }
}

TEST_P(Identities, DerivativeRepresentationRoutesAgree) {
  const VectorFamily& fam = monic_family(GetParam());
  const ExpansionFn closed = monic_closed_expansions(pde_of(GetParam()));
  for (int n = 0; n <= 7; ++n) {
    const DerivRepSet d = derivative_representation(fam, n);
    const DerivRepSet c = derivative_representation(closed, n);
    for (Axis a : kAxes) {
      expect_zero(derivrep_residual(fam, d, a));
      const std::size_t s = slot(a);
      EXPECT_EQ(d.V[s], c.V[s]);
      EXPECT_EQ(d.Y[s], c.Y[s]);
      EXPECT_EQ(d.Z[s], c.Z[s]);
    }
    if (n >= 1) {
      const DerivRepSet t = derivative_representation_by_ttrr(fam, n);
      for (int s = 0; s < 2; ++s) {
        EXPECT_EQ(t.V[s], d.V[s]);
        EXPECT_EQ(t.Y[s], d.Y[s]);
        EXPECT_EQ(t.Z[s], d.Z[s]);
      }
    }
  }
}

TEST_P(Identities, StructureRoutesAgree) {
  const VectorFamily& fam = monic_family(GetParam());
  const PhiCase phi = select_phi(pde_of(GetParam()));
  const ExpansionFn closed = monic_closed_expansions(pde_of(GetParam()));
  for (int n = 1; n <= 7; ++n) {
    const StructureSet a = structure_matrices(fam, phi, n);
    const StructureSet b = structure_matrices(closed, phi, n);
    for (int s = 0; s < 2; ++s) {
      EXPECT_EQ(a.W[s], b.W[s]);
      EXPECT_EQ(a.S[s], b.S[s]);
      EXPECT_EQ(a.T[s], b.T[s]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Relations, Identities, ::testing::Values(0, 1, 2, 3));

TEST(Relations, DerivativeFamilyOfAppell) {
  const VectorFamily q = derivative_family(monic_family(0), Axis::x);
  EXPECT_EQ(q[0], (PolyVector{C(1)}));
  for (int n = 0; n < q.max_degree(); ++n) {
    for (const auto& e : q[n]) EXPECT_EQ(e.degree(), n);
  }
  const ExpansionFn gq = derivative_expansions(expansions_of(monic_family(0)), Axis::x);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(gq(n, n), shift_matrix(n, Axis::x) * derivative_matrix(n + 1, Axis::x));
  }
}

TEST(Relations, AppellStructureBands) {
  const VectorFamily& fam = monic_family(1);
  const PhiCase phi = select_phi(appell(2, 3));
  for (int n = 1; n <= 6; ++n) {
    const StructureSet st = structure_matrices(fam, phi, n);
    const DerivRepSet d = derivative_representation(fam, n);
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(st.W[0](i, i), Q(i - n));
      EXPECT_EQ(st.W[0](i, i + 1), Q(i - n));
      EXPECT_EQ(st.W[1](i, i), Q(-i));
      EXPECT_EQ(st.W[1](i, i + 1), Q(-i));
      EXPECT_EQ(d.V[0](i, i), Q(1, n + 1 - i));
      EXPECT_EQ(d.V[1](i, i), Q(1, i + 1));
    }
  }
}

TEST(Relations, NonMonicFamily) {
  const AppellParams p{Q(1), Q(1)};
  std::vector<PolyVector> vs;
  for (int n = 0; n <= 4; ++n) vs.push_back(nonmonic_F_vector(p, n));
  const VectorFamily F(vs);
  for (int n = 0; n <= 3; ++n) {
    const TtrrSet t = general_ttrr(F, n);
    for (Axis a : kAxes) expect_zero(ttrr_residual(F, t, a));
  }
  EXPECT_EQ(F.G(1, 1), connection_F(p, 1));
}

TEST(Relations, SingularLeadingBlock) {
  const VectorFamily F({{C(1)}, {X() + Y(), Q(2) * X() + Q(2) * Y()}, monomial_vector(2)});
  EXPECT_THROW(general_ttrr(F, 0), SingularLeading);
}

TEST(Relations, PerturbationBreaksRecurrence) {
  const VectorFamily& fam = monic_family(1);
  for (int n = 1; n <= 4; ++n) {
    for (Axis a : kAxes) {
      TtrrSet t = general_ttrr(fam, n);
      t.B[slot(a)](0, 0) += Q(1);
      EXPECT_FALSE(is_zero(ttrr_residual(fam, t, a)));
      t = general_ttrr(fam, n);
      t.C[slot(a)](n, n - 1) += Q(1);
      EXPECT_FALSE(is_zero(ttrr_residual(fam, t, a)));
      t = general_ttrr(fam, n);
      t.A[slot(a)](0, 0) += Q(1);
      EXPECT_FALSE(is_zero(ttrr_residual(fam, t, a)));
    }
  }
}

TEST(Relations, RankFacts) {
  const VectorFamily& fam = monic_family(1);
  for (int n = 1; n <= 7; ++n) {
    const TtrrSet t = general_ttrr(fam, n);
    EXPECT_EQ(joint_shift_matrix(n).rank(), static_cast<std::size_t>(n + 2));
    EXPECT_EQ(vstack(t.C[0], t.C[1]).rank(), static_cast<std::size_t>(n));
  }
}

TEST(Relations, QuadraticCoefficients) {
  const auto c = quadratic_coefficients(X() * (C(1) - X() - Y()));
  EXPECT_EQ(c[0], Q(-1));
  EXPECT_EQ(c[1], Q(-1));
  EXPECT_EQ(c[2], Q(0));
  EXPECT_EQ(c[3], Q(1));
  EXPECT_EQ(c[4], Q(0));
  EXPECT_EQ(c[5], Q(0));
  EXPECT_THROW(quadratic_coefficients(X().pow(3)), Error);
}

TEST(Relations, ClosedExpansionsStopAtTwoBlocks) {
  const ExpansionFn closed = monic_closed_expansions(appell(1, 1));
  EXPECT_EQ(closed(3, 3), RationalMatrix::identity(4));
  EXPECT_THROW(closed(4, 1), std::out_of_range);
}

}  // namespace
}  // namespace opde::testing
