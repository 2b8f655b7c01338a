#pragma once

#include <vector>

#include "opde/matrix.hpp"
#include "opde/polynomial.hpp"

namespace opde {

/// L_{n,j}: the (n+1)x(n+2) 0/1 matrix with L_{n,j} x^{n+1} = x_j x^n.
RationalMatrix shift_matrix(int n, Axis axis);

/// L_n: L_{n,1} stacked over L_{n,2}, size (2n+2)x(n+2).
RationalMatrix joint_shift_matrix(int n);

/// E_{n,j}: the (n+1)xn matrix with d/dx_j x^n = E_{n,j} x^{n-1}. Requires n >= 1.
RationalMatrix derivative_matrix(int n, Axis axis);

/// D_n^+ = (L_n^T L_n)^{-1} L_n^T, the left inverse of the joint shift.
RationalMatrix joint_left_inverse(int n);

/// Expansion of v in the monomial vectors: returns G with G[k] of size
/// len(v)x(k+1) and v = sum_k G[k] x^k, for k = 0..n. Throws DegreeOverflow if
/// some entry has total degree above n.
std::vector<RationalMatrix> expansion_matrices(const PolyVector& v, int n);

/// Inverse of expansion_matrices: sum_k G[k] x^k.
PolyVector reconstruct(const std::vector<RationalMatrix>& G);

/// A polynomial vector family P_0, P_1, ... with P_n of length n+1 and total
/// degree n. Expansion matrices are computed on demand.
class VectorFamily {
 public:
  VectorFamily() = default;
  explicit VectorFamily(std::vector<PolyVector> vectors);

  int max_degree() const noexcept { return static_cast<int>(vectors_.size()) - 1; }
  /// P_n; for n = -1 the empty vector.
  const PolyVector& operator[](int n) const;
  const std::vector<PolyVector>& vectors() const noexcept { return vectors_; }

  /// G_{n,k}, size (n+1)x(k+1). For n = -1 or k < 0 returns the matching
  /// zero-sized matrix.
  RationalMatrix G(int n, int k) const;

 private:
  std::vector<PolyVector> vectors_;
  std::vector<std::vector<RationalMatrix>> expansions_;
};

}  // namespace opde
