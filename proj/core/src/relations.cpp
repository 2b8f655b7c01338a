#include "opde/relations.hpp"

#include <stdexcept>

#include "opde/errors.hpp"
#include "opde/monic.hpp"

namespace opde {

namespace {

RationalMatrix inverse_or_throw(const RationalMatrix& m, int degree) {
  try {
    return m.inverse();
  } catch (const std::domain_error&) {
    throw SingularLeading(degree);
  }
}

// L_{m,j} with the empty shapes below m = 0.
RationalMatrix L(int m, Axis j) {
  if (m < 0) return RationalMatrix(0, m + 2 > 0 ? m + 2 : 0);
  return shift_matrix(m, j);
}

RationalMatrix E(int m, Axis j) {
  if (m < 1) return RationalMatrix(m + 1 > 0 ? m + 1 : 0, 0);
  return derivative_matrix(m, j);
}

}  // namespace

ExpansionFn expansions_of(const VectorFamily& fam) {
  return [&fam](int n, int k) { return fam.G(n, k); };
}

ExpansionFn monic_closed_expansions(const HypergeometricPDE& pde) {
  return [pde](int n, int k) -> RationalMatrix {
    if (n < 0) return RationalMatrix(0, k < 0 ? 0 : k + 1);
    if (k < 0) return RationalMatrix(n + 1, 0);
    if (k == n) return RationalMatrix::identity(n + 1);
    if (k > n) return RationalMatrix(n + 1, k + 1);
    const auto [first, second] = subleading_matrices(pde, n);
    if (k == n - 1) return first;
    if (k == n - 2) return *second;
    throw std::out_of_range("closed-form expansion block not available");
  };
}

TtrrSet general_ttrr(const ExpansionFn& G, int n) {
  if (n < 0) throw std::invalid_argument("general_ttrr: negative degree");
  TtrrSet t;
  t.n = n;
  const RationalMatrix Gnn_inv = inverse_or_throw(G(n, n), n);
  const RationalMatrix Gup_inv = inverse_or_throw(G(n + 1, n + 1), n + 1);
  const RationalMatrix Gdn_inv =
      n >= 1 ? inverse_or_throw(G(n - 1, n - 1), n - 1) : RationalMatrix(0, 0);
  for (Axis j : kAxes) {
    const std::size_t s = slot(j);
    const RationalMatrix A = G(n, n) * L(n, j) * Gup_inv;
    RationalMatrix Bm = -(A * G(n + 1, n));
    if (n >= 1) Bm += G(n, n - 1) * L(n - 1, j);
    Bm = Bm * Gnn_inv;
    RationalMatrix Cm(n + 1, n);
    if (n >= 1) {
      RationalMatrix acc = -(A * G(n + 1, n - 1)) - Bm * G(n, n - 1);
      if (n >= 2) acc += G(n, n - 2) * L(n - 2, j);
      Cm = acc * Gdn_inv;
    }
    t.A[s] = A;
    t.B[s] = Bm;
    t.C[s] = Cm;
  }
  return t;
}

TtrrSet general_ttrr(const VectorFamily& fam, int n) { return general_ttrr(expansions_of(fam), n); }

VectorFamily derivative_family(const VectorFamily& fam, Axis axis) {
  std::vector<PolyVector> qs;
  for (int m = 0; m < fam.max_degree(); ++m) {
    qs.push_back(shift_matrix(m, axis) * diff(fam[m + 1], axis));
  }
  return VectorFamily(std::move(qs));
}

ExpansionFn derivative_expansions(const ExpansionFn& G, Axis axis) {
  return [G, axis](int m, int k) -> RationalMatrix {
    if (m < 0) return RationalMatrix(0, k < 0 ? 0 : k + 1);
    if (k < 0) return RationalMatrix(m + 1, 0);
    return L(m, axis) * G(m + 1, k + 1) * E(k + 1, axis);
  };
}

TtrrSet derivative_ttrr(const ExpansionFn& G, int n) {
  TtrrSet out;
  out.n = n;
  for (Axis j : kAxes) {
    const TtrrSet q = general_ttrr(derivative_expansions(G, j), n);
    const std::size_t s = slot(j);
    out.A[s] = q.A[s];
    out.B[s] = q.B[s];
    out.C[s] = q.C[s];
  }
  return out;
}

TtrrSet derivative_ttrr(const VectorFamily& fam, int n) {
  return derivative_ttrr(expansions_of(fam), n);
}

std::array<Rational, 6> quadratic_coefficients(const BivariatePoly& phi) {
  if (phi.degree().value_or(0) > 2) {
    throw Error("structure relations need a weight factor of total degree at most 2");
  }
  return {phi.coeff(2, 0), phi.coeff(1, 1), phi.coeff(0, 2),
          phi.coeff(1, 0), phi.coeff(0, 1), phi.coeff(0, 0)};
}

StructureSet structure_matrices(const ExpansionFn& G, const PhiCase& phi, int n) {
  if (n < 1) throw std::invalid_argument("structure_matrices: degree must be positive");
  StructureSet out;
  out.n = n;
  const RationalMatrix Gup_inv = inverse_or_throw(G(n + 1, n + 1), n + 1);
  const RationalMatrix Gnn_inv = inverse_or_throw(G(n, n), n);
  const RationalMatrix Gdn_inv = inverse_or_throw(G(n - 1, n - 1), n - 1);
  for (Axis j : kAxes) {
    const auto [al, be, ga, de, ep, om] = quadratic_coefficients(phi_axis(phi, j));
    // x^m times the quadratic and linear parts, as maps on x^{m+2} and x^{m+1}.
    auto quad = [&](int m) {
      return al * (L(m, Axis::x) * L(m + 1, Axis::x)) + be * (L(m, Axis::x) * L(m + 1, Axis::y)) +
             ga * (L(m, Axis::y) * L(m + 1, Axis::y));
    };
    auto lin = [&](int m) { return de * L(m, Axis::x) + ep * L(m, Axis::y); };
    const RationalMatrix W = G(n, n) * E(n, j) * quad(n - 1) * Gup_inv;
    RationalMatrix S = G(n, n) * E(n, j) * lin(n - 1) - W * G(n + 1, n);
    if (n >= 2) S += G(n, n - 1) * E(n - 1, j) * quad(n - 2);
    S = S * Gnn_inv;
    RationalMatrix T = om * (G(n, n) * E(n, j)) - W * G(n + 1, n - 1) - S * G(n, n - 1);
    if (n >= 2) T += G(n, n - 1) * E(n - 1, j) * lin(n - 2);
    if (n >= 3) T += G(n, n - 2) * E(n - 2, j) * quad(n - 3);
    T = T * Gdn_inv;
    const std::size_t s = slot(j);
    out.W[s] = W;
    out.S[s] = S;
    out.T[s] = T;
  }
  return out;
}

StructureSet structure_matrices(const VectorFamily& fam, const PhiCase& phi, int n) {
  return structure_matrices(expansions_of(fam), phi, n);
}

DerivRepSet derivative_representation(const ExpansionFn& G, int n) {
  if (n < 0) throw std::invalid_argument("derivative_representation: negative degree");
  DerivRepSet out;
  out.n = n;
  for (Axis j : kAxes) {
    const ExpansionFn Gq = derivative_expansions(G, j);
    const RationalMatrix V = G(n, n) * inverse_or_throw(Gq(n, n), n);
    RationalMatrix Y(n + 1, n), Z(n + 1, n >= 1 ? n - 1 : 0);
    if (n >= 1) {
      Y = (G(n, n - 1) - V * Gq(n, n - 1)) * inverse_or_throw(Gq(n - 1, n - 1), n - 1);
    }
    if (n >= 2) {
      Z = (G(n, n - 2) - V * Gq(n, n - 2) - Y * Gq(n - 1, n - 2)) *
          inverse_or_throw(Gq(n - 2, n - 2), n - 2);
    }
    const std::size_t s = slot(j);
    out.V[s] = V;
    out.Y[s] = Y;
    out.Z[s] = Z;
  }
  return out;
}

DerivRepSet derivative_representation(const VectorFamily& fam, int n) {
  return derivative_representation(expansions_of(fam), n);
}

bool derivative_embeds(const VectorFamily& fam, Axis axis) {
  for (int m = 0; m < fam.max_degree(); ++m) {
    const PolyVector d = diff(fam[m + 1], axis);
    const RationalMatrix Lm = shift_matrix(m, axis);
    if (Lm.transpose() * (Lm * d) != d) return false;
  }
  return true;
}

DerivRepSet derivative_representation_by_ttrr(const VectorFamily& fam, int n) {
  if (n < 1) throw std::invalid_argument("derivative_representation_by_ttrr: degree must be >= 1");
  const VectorFamily needed(std::vector<PolyVector>(fam.vectors().begin(),
                                                    fam.vectors().begin() + n + 2));
  const TtrrSet t = general_ttrr(fam, n);
  DerivRepSet out;
  out.n = n;
  for (Axis j : kAxes) {
    if (!derivative_embeds(needed, j)) {
      throw Error("derivative vectors are not of the form L^T Q; recurrence difference undefined");
    }
    const std::size_t s = slot(j);
    const TtrrSet q = derivative_ttrr(fam, n - 1);
    const int m = n - 1;
    const RationalMatrix Ad = L(m, j).transpose() * q.A[s] * L(m + 1, j);
    const RationalMatrix Bd = L(m, j).transpose() * q.B[s] * L(m, j);
    const RationalMatrix Cd = L(m, j).transpose() * q.C[s] * L(m - 1, j);
    out.V[s] = (t.A[s] - Ad) * L(n, j).transpose();
    out.Y[s] = (t.B[s] - Bd) * L(n - 1, j).transpose();
    out.Z[s] = (t.C[s] - Cd) * L(n - 2, j).transpose();
  }
  return out;
}

PolyVector ttrr_residual(const VectorFamily& fam, const TtrrSet& t, Axis axis) {
  const int n = t.n;
  const std::size_t s = slot(axis);
  return BivariatePoly::var(axis) * fam[n] -
         (t.A[s] * fam[n + 1] + t.B[s] * fam[n] + t.C[s] * fam[n - 1]);
}

PolyVector structure_residual(const VectorFamily& fam, const StructureSet& st, const PhiCase& phi,
                              Axis axis) {
  const int n = st.n;
  const std::size_t s = slot(axis);
  return phi_axis(phi, axis) * diff(fam[n], axis) -
         (st.W[s] * fam[n + 1] + st.S[s] * fam[n] + st.T[s] * fam[n - 1]);
}

PolyVector derivrep_residual(const VectorFamily& fam, const DerivRepSet& d, Axis axis) {
  const int n = d.n;
  const std::size_t s = slot(axis);
  auto Q = [&](int m) { return shift_matrix(m, axis) * diff(fam[m + 1], axis); };
  PolyVector rhs = d.V[s] * Q(n);
  if (n >= 1) rhs = rhs + d.Y[s] * Q(n - 1);
  if (n >= 2) rhs = rhs + d.Z[s] * Q(n - 2);
  return fam[n] - rhs;
}

}  // namespace opde
