#include "helpers.hpp"
#include "opde/appell.hpp"
#include "opde/errors.hpp"
#include "opde/golden.hpp"
#include "opde/monic.hpp"
#include "opde/relations.hpp"

namespace opde::testing {
namespace {

Rational binomial(long n, long k) {
  Rational r(1);
  for (long i = 1; i <= k; ++i) r = r * Q(n - k + i, i);
  return r;
}

// Integral of x^a y^b over the triangle by integrating y first and expanding
// (1-x)^{b+1} binomially.
Rational triangle_integral(long a, long b) {
  Rational total(0);
  for (long k = 0; k <= b + 1; ++k) {
    const Rational term = binomial(b + 1, k) * Q(1, a + k + 1);
    total = (k % 2 == 0) ? total + term : total - term;
  }
  return total * Q(1, b + 1);
}

Rational oracle_moment(long alpha, long beta, long i, long j) {
  return triangle_integral(i + alpha - 1, j + beta - 1) / triangle_integral(alpha - 1, beta - 1);
}

RationalMatrix computed(const MonicFamily& fam, const PhiCase& phi, int n, GoldenKind k) {
  const std::size_t s = static_cast<std::size_t>(k) % 2;
  switch (k) {
    case GoldenKind::B1:
    case GoldenKind::B2: return general_ttrr(fam.family, n).B[s];
    case GoldenKind::C1:
    case GoldenKind::C2: return general_ttrr(fam.family, n).C[s];
    case GoldenKind::W1:
    case GoldenKind::W2: return structure_matrices(fam.family, phi, n).W[s];
    case GoldenKind::S1:
    case GoldenKind::S2: return structure_matrices(fam.family, phi, n).S[s];
    case GoldenKind::T1:
    case GoldenKind::T2: return structure_matrices(fam.family, phi, n).T[s];
    case GoldenKind::V1:
    case GoldenKind::V2: return derivative_representation(fam.family, n).V[s];
    case GoldenKind::Y1:
    case GoldenKind::Y2: return derivative_representation(fam.family, n).Y[s];
    default: return derivative_representation(fam.family, n).Z[s];
  }
}

TEST(Families, MomentsMatchIntegration) {
  for (auto [a, b] : {std::pair{1L, 1L}, std::pair{2L, 3L}, std::pair{4L, 1L}}) {
    const AppellParams p{Q(a), Q(b)};
    for (int i = 0; i <= 5; ++i) {
      for (int j = 0; i + j <= 6; ++j) EXPECT_EQ(moment(p, i, j), oracle_moment(a, b, i, j));
    }
  }
  EXPECT_EQ(apply_functional(AppellParams{Q(1), Q(1)}, X()), Q(1, 3));
  EXPECT_EQ(apply_functional(AppellParams{Q(2), Q(3)}, X() * Y()), Q(1, 7));
  EXPECT_EQ(apply_functional(AppellParams{Q(2), Q(3)}, C(5)), Q(5));
}

TEST(Families, ParamsRoundTrip) {
  const AppellParams p{Q(3, 2), Q(5)};
  const auto back = appell_params_of(appell_pde(p));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->alpha, p.alpha);
  EXPECT_EQ(back->beta, p.beta);
  EXPECT_EQ(appell_pde(AppellParams{Q(1), Q(1)}), appell(1, 1));
  EXPECT_FALSE(appell_params_of(disk()).has_value());
  EXPECT_THROW((AppellParams{Q(0), Q(1)}.validate()), std::invalid_argument);
}

TEST(Families, SeriesAgreesWithRecurrence) {
  for (auto [a, b] : {std::pair{1L, 1L}, std::pair{2L, 3L}}) {
    const AppellParams p{Q(a), Q(b)};
    const MonicFamily fam = build_monic(appell(a, b), 6);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(monic_appell_vector(p, n), fam.family[n]);
  }
  const AppellParams p{Q(1), Q(1)};
  EXPECT_EQ(monic_appell_series(p, 1, 0), X() - C(1, 3));
  EXPECT_EQ(monic_appell_series(p, 0, 0), C(1));
}

TEST(Families, Orthogonality) {
  const AppellParams p{Q(2), Q(3)};
  for (int n = 1; n <= 5; ++n) {
    const PolyVector P = monic_appell_vector(p, n);
    for (int m = 0; m < n; ++m) {
      EXPECT_EQ(orthogonality_blocks(p, P, m), RationalMatrix(m + 1, n + 1));
    }
    const RationalMatrix H = orthogonality_blocks(p, P, n);
    EXPECT_NE(H.determinant(), 0);
    EXPECT_EQ(H, H.transpose());
  }
}

TEST(Families, GoldenMatchesComputed) {
  for (auto [a, b] : {std::pair{1L, 1L}, std::pair{2L, 3L}, std::pair{5L, 2L}}) {
    const AppellParams p{Q(a), Q(b)};
    const MonicFamily fam = build_monic(appell(a, b), 7);
    const PhiCase phi = select_phi(appell(a, b));
    for (GoldenKind k : kGoldenKinds) {
      for (int n = std::max(1, golden_min_degree(k)); n <= 6; ++n) {
        EXPECT_EQ(golden_matrix(p, n, k), computed(fam, phi, n, k)) << golden_name(k) << " n=" << n;
      }
    }
  }
}

TEST(Families, GoldenSpotValues) {
  const AppellParams p{Q(1), Q(1)};
  EXPECT_EQ(golden_matrix(p, 1, GoldenKind::C1)(0, 0), Q(1, 18));
  EXPECT_EQ(golden_matrix(p, 0, GoldenKind::B1), (RationalMatrix{{Q(1, 3)}}));
  RationalMatrix v(3, 3);
  v(0, 0) = Q(1, 3);
  v(1, 1) = Q(1, 2);
  v(2, 2) = Q(1);
  EXPECT_EQ(golden_matrix(p, 2, GoldenKind::V1), v);
  const RationalMatrix w = golden_matrix(p, 3, GoldenKind::W1);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (j != i && j != i + 1) EXPECT_EQ(w(i, j), 0);
    }
  }
  EXPECT_THROW(golden_matrix(p, 1, GoldenKind::Z1), IndexOutOfPrintedRange);
  EXPECT_THROW(golden_matrix(p, 0, GoldenKind::W2), IndexOutOfPrintedRange);
  EXPECT_EQ(golden_name(GoldenKind::T2), "T2");
}

TEST(Families, NonMonicAppell) {
  const AppellParams p{Q(1), Q(1)};
  EXPECT_EQ(nonmonic_F(p, 0, 0), C(1));
  EXPECT_EQ(nonmonic_F(p, 1, 0), C(1) - Q(2) * X() - Y());
  EXPECT_EQ(nonmonic_F(p, 0, 1), C(1) - X() - Q(2) * Y());
  EXPECT_EQ(connection_F(p, 0), (RationalMatrix{{Q(1)}}));
  EXPECT_EQ(connection_F(p, 1), (RationalMatrix{{Q(-2), Q(-1)}, {Q(-1), Q(-2)}}));
  for (auto [a, b] : {std::pair{1L, 1L}, std::pair{2L, 3L}}) {
    const AppellParams q{Q(a), Q(b)};
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(nonmonic_F_vector(q, n), connection_F(q, n) * monic_appell_vector(q, n));
    }
  }
}

TEST(Families, Jacobi) {
  const BivariatePoly t = X();
  EXPECT_EQ(jacobi(Q(1), Q(0), 1), Q(3, 2) * t + C(1, 2));
  EXPECT_EQ(jacobi(Q(0), Q(0), 2), Q(3, 2) * t * t - C(1, 2));
  for (int n = 0; n <= 5; ++n) {
    Rational at_one(0);
    const BivariatePoly pn = jacobi(Q(2), Q(1, 2), n);
    for (int i = 0; i <= n; ++i) at_one = at_one + pn.coeff(i, 0);
    Rational expected(1);
    for (int k = 1; k <= n; ++k) expected = expected * (Q(2) + Q(k)) / Q(k);
    EXPECT_EQ(at_one, expected);
  }
}

TEST(Families, Koornwinder) {
  const AppellParams p{Q(1), Q(1)};
  EXPECT_EQ(koornwinder(p, 0, 0), C(1));
  EXPECT_EQ(koornwinder(p, 1, 0), Q(3) * X() - C(1));
  EXPECT_EQ(koornwinder(p, 0, 1), X() + Q(2) * Y() - C(1));
  EXPECT_EQ(connection_K(p, 1), (RationalMatrix{{Q(3), Q(0)}, {Q(1), Q(2)}}));
  for (auto [a, b] : {std::pair{1L, 1L}, std::pair{2L, 3L}}) {
    const AppellParams q{Q(a), Q(b)};
    for (int n = 0; n <= 4; ++n) {
      const RationalMatrix G = connection_K(q, n);
      EXPECT_EQ(koornwinder_vector(q, n), G * monic_appell_vector(q, n));
      for (std::size_t i = 0; i < G.rows(); ++i) {
        for (std::size_t j = i + 1; j < G.cols(); ++j) EXPECT_EQ(G(i, j), 0);
      }
    }
  }
}

TEST(Families, KoornwinderBiorthogonalToAppell) {
  const AppellParams p{Q(2), Q(3)};
  for (int n = 1; n <= 4; ++n) {
    const PolyVector K = koornwinder_vector(p, n);
    for (int m = 0; m < n; ++m) {
      EXPECT_EQ(orthogonality_blocks(p, K, m), RationalMatrix(m + 1, n + 1));
    }
    for (std::size_t i = 0; i < K.size(); ++i) {
      for (std::size_t j = 0; j < K.size(); ++j) {
        if (i != j) EXPECT_EQ(apply_functional(p, K[i] * K[j]), 0) << n << " " << i << " " << j;
      }
    }
  }
}

}  // namespace
}  // namespace opde::testing
