#include "helpers.hpp"
#include "opde/monic.hpp"
#include "opde/relations.hpp"

namespace opde::testing {
namespace {

TEST(Errata, SecondSubleadingBlockOnScaledTriangle) {
  const HypergeometricPDE g = scaled_triangle();
  const MonicFamily fam = build_monic(g, 6);
  for (int n = 2; n <= 6; ++n) {
    const RationalMatrix built = fam.family.G(n, n - 2);
    EXPECT_EQ(*subleading_matrices(g, n).second, built);
    if (n >= 3) EXPECT_NE(subleading_second_printed(g, n), built) << "n=" << n;
  }
}

TEST(Errata, PrintedSecondBlockHoldsForAppell) {
  for (const auto& p : {appell(1, 1), appell(2, 3)}) {
    for (int n = 2; n <= 6; ++n) {
      EXPECT_EQ(subleading_second_printed(p, n), *subleading_matrices(p, n).second);
    }
  }
}

TEST(Errata, C12TopEntryOnScaledTriangle) {
  const HypergeometricPDE g = scaled_triangle();
  const MonicFamily fam = build_monic(g, 3);
  const RationalMatrix built = general_ttrr(fam.family, 1).C[1];
  EXPECT_EQ(monic_ttrr(g, 1).C[1], built);
  EXPECT_NE(monic_c12_printed(g), built);
  EXPECT_EQ(monic_c12_printed(appell(2, 3)), monic_ttrr(appell(2, 3), 1).C[1]);
}

TEST(Errata, PrintedFormsBreakTheRecurrence) {
  const HypergeometricPDE g = scaled_triangle();
  const MonicFamily fam = build_monic(g, 3);
  TtrrSet t = general_ttrr(fam.family, 1);
  t.C[1] = monic_c12_printed(g);
  EXPECT_FALSE(is_zero(ttrr_residual(fam.family, t, Axis::y)));
}

TEST(Errata, LowDegreeRecurrenceNeedsLeadingInverse) {
  const MonicFamily monic = build_monic(appell(2, 3), 4);
  std::vector<PolyVector> vs = monic.family.vectors();
  vs[0] = {C(2)};
  const VectorFamily fam(vs);
  for (int n = 0; n <= 2; ++n) {
    const TtrrSet t = general_ttrr(fam, n);
    for (Axis a : kAxes) expect_zero(ttrr_residual(fam, t, a));
  }
  for (Axis a : kAxes) {
    const std::size_t s = slot(a);
    TtrrSet t0 = general_ttrr(fam, 0);
    t0.B[s] = -(t0.A[s] * fam.G(1, 0));
    EXPECT_FALSE(is_zero(ttrr_residual(fam, t0, a)));
    TtrrSet t1 = general_ttrr(fam, 1);
    t1.C[s] = -(t1.A[s] * fam.G(2, 0) + t1.B[s] * fam.G(1, 0));
    EXPECT_FALSE(is_zero(ttrr_residual(fam, t1, a)));
  }
}

}  // namespace
}  // namespace opde::testing
