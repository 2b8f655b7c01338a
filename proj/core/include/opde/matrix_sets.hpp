#pragma once

#include <array>

#include "opde/matrix.hpp"
#include "opde/polynomial.hpp"

namespace opde {

inline std::size_t slot(Axis a) { return a == Axis::x ? 0 : 1; }

/// x_j P_n = A P_{n+1} + B P_n + C P_{n-1}.
struct TtrrSet {
  int n = 0;
  std::array<RationalMatrix, 2> A, B, C;
};

/// phi_j d_j P_n = W P_{n+1} + S P_n + T P_{n-1}.
struct StructureSet {
  int n = 0;
  std::array<RationalMatrix, 2> W, S, T;
};

/// P_n = V Q_n + Y Q_{n-1} + Z Q_{n-2} with Q_k = L_{k,j} d_j P_{k+1}.
/// Multiplying on the right by L_{k,j} gives the form in d_j P_{k+1}.
struct DerivRepSet {
  int n = 0;
  std::array<RationalMatrix, 2> V, Y, Z;
};

}  // namespace opde
