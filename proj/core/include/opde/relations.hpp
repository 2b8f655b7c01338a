#pragma once

#include <functional>

#include "opde/matrix_sets.hpp"
#include "opde/pde.hpp"
#include "opde/structural.hpp"
#include "opde/weight.hpp"

namespace opde {

/// Source of expansion matrices G_{n,k}. Must return the zero-sized shapes
/// (0 x (k+1) for n = -1, (n+1) x 0 for k = -1).
using ExpansionFn = std::function<RationalMatrix(int n, int k)>;

/// G_{n,k} read off a built family.
ExpansionFn expansions_of(const VectorFamily& fam);

/// Closed-form monic expansions: G_{n,n} = I and the two subleading blocks;
/// deeper blocks are not available and throw std::out_of_range.
ExpansionFn monic_closed_expansions(const HypergeometricPDE& pde);

/// Recurrence matrices from the three leading expansion blocks of degrees
/// n-1, n, n+1. Throws SingularLeading(k) when G_{k,k} is singular.
TtrrSet general_ttrr(const ExpansionFn& G, int n);
TtrrSet general_ttrr(const VectorFamily& fam, int n);

/// Q_m = L_{m,j} d_j P_{m+1} for m = 0 .. fam.max_degree() - 1.
VectorFamily derivative_family(const VectorFamily& fam, Axis axis);

/// Expansion of Q_m^{(j)}: Gq_{m,k} = L_{m,j} G_{m+1,k+1} E_{k+1,j}.
ExpansionFn derivative_expansions(const ExpansionFn& G, Axis axis);

/// Unique recurrence of the Q families, slot j holding the Q^{(j)} matrices.
TtrrSet derivative_ttrr(const ExpansionFn& G, int n);
TtrrSet derivative_ttrr(const VectorFamily& fam, int n);

/// Coefficients (alpha, beta, gamma, delta, epsilon, omega) of a factor
///   alpha x^2 + beta x y + gamma y^2 + delta x + epsilon y + omega.
/// Throws opde::Error when the degree exceeds 2.
std::array<Rational, 6> quadratic_coefficients(const BivariatePoly& phi);

/// Structure matrices for n >= 1 from the expansion blocks and the factors of
/// the weight-factor case.
StructureSet structure_matrices(const ExpansionFn& G, const PhiCase& phi, int n);
StructureSet structure_matrices(const VectorFamily& fam, const PhiCase& phi, int n);

/// Derivative representation P_n = V Q_n + Y Q_{n-1} + Z Q_{n-2}, obtained by
/// matching the three leading expansion blocks.
DerivRepSet derivative_representation(const ExpansionFn& G, int n);
DerivRepSet derivative_representation(const VectorFamily& fam, int n);

/// The same matrices via differences of recurrences,
///   V = (A_n - A^{(j)}_{n-1}) L_{n,j}^T, ...,
/// with A^{(j)}_m = L_{m,j}^T A~_m L_{m+1,j} and likewise for B and C. Needs
/// d_j P_{m+1} = L_{m,j}^T Q_m for the degrees involved (the entry lost by
/// L_{m,j} must vanish); throws opde::Error otherwise. n >= 1.
DerivRepSet derivative_representation_by_ttrr(const VectorFamily& fam, int n);

/// True when d_j P_{m+1} = L_{m,j}^T Q_m holds for m = 0 .. max-1.
bool derivative_embeds(const VectorFamily& fam, Axis axis);

/// x_j P_n - (A P_{n+1} + B P_n + C P_{n-1}); zero when the recurrence holds.
PolyVector ttrr_residual(const VectorFamily& fam, const TtrrSet& t, Axis axis);

/// phi_j d_j P_n - (W P_{n+1} + S P_n + T P_{n-1}).
PolyVector structure_residual(const VectorFamily& fam, const StructureSet& st, const PhiCase& phi,
                              Axis axis);

/// P_n - (V Q_n + Y Q_{n-1} + Z Q_{n-2}) with Q from derivative_family.
PolyVector derivrep_residual(const VectorFamily& fam, const DerivRepSet& d, Axis axis);

}  // namespace opde
