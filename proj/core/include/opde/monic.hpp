#pragma once

#include <optional>
#include <utility>

#include "opde/matrix.hpp"
#include "opde/matrix_sets.hpp"
#include "opde/pde.hpp"
#include "opde/structural.hpp"

namespace opde {

/// Closed-form subleading blocks of a monic solution of degree n:
/// first = G_{n,n-1} ((n+1)xn), second = G_{n,n-2} ((n+1)x(n-1)), absent for
/// n = 1. Throws NotAdmissible when a needed a*k + e vanishes.
std::pair<RationalMatrix, std::optional<RationalMatrix>> subleading_matrices(
    const HypergeometricPDE& pde, int n);

/// G_{n,n-2} with the subdiagonal entries exactly as they are usually printed
/// (the bracketed last term without the b1 factor and the 4 b3 c3 term). Only
/// agrees with subleading_matrices when b1 = 1 and b3 = 0 or on the last
/// subdiagonal row; kept for comparison.
RationalMatrix subleading_second_printed(const HypergeometricPDE& pde, int n);

/// Closed-form recurrence matrices of the monic family at degree n.
TtrrSet monic_ttrr(const HypergeometricPDE& pde, int n);

/// C_{1,2} with the top entry as commonly printed (-d3 f1^2 in place of
/// -d3 e^2); kept for comparison.
RationalMatrix monic_c12_printed(const HypergeometricPDE& pde);

/// Degree-n monic vector solved directly from the equation, monomial by
/// monomial, without any recurrence.
PolyVector solve_monic_direct(const HypergeometricPDE& pde, int n);

struct MonicFamily {
  HypergeometricPDE pde;
  VectorFamily family;

  int max_degree() const { return family.max_degree(); }
  const PolyVector& operator[](int n) const { return family[n]; }
};

/// Builds P_0..P_N by the joint recurrence
///   P_{n+1} = D_n^+ [ (x; y) (x) I - B_n ] P_n - D_n^+ C_n P_{n-1}.
/// Throws NotAdmissible or NotSelfAdjoint. With cross_check set, every vector
/// is compared with solve_monic_direct (RecurrenceMismatch on disagreement).
MonicFamily build_monic(const HypergeometricPDE& pde, int N, bool cross_check = true);

/// Residual of the equation on each entry of vector n.
PolyVector pde_residual(const MonicFamily& fam, int n);

}  // namespace opde
