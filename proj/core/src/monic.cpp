#include "opde/monic.hpp"

#include "opde/errors.hpp"

namespace opde {

namespace {

using R = Rational;

R varpi_nonzero(const HypergeometricPDE& pde, long k) {
  const R w = pde.varpi(k);
  if (w.is_zero()) throw NotAdmissible(k);
  return w;
}

RationalMatrix first_block(const HypergeometricPDE& p, int n) {
  const R w = varpi_nonzero(p, 2 * n - 2);
  RationalMatrix G(n + 1, n);
  // 1-based g~_{i,i} -> (i-1, i-1) and g~_{i+1,i} -> (i, i-1).
  for (int i = 1; i <= n; ++i) {
    G(i - 1, i - 1) = R(n + 1 - i) * (R(n - i) * p.b1 + R(2 * (i - 1)) * p.c3 + p.f1) / w;
    G(i, i - 1) = R(i) * (R(i - 1) * p.b2 + R(2 * (n - i)) * p.b3 + p.f2) / w;
  }
  return G;
}

// Diagonal and second-subdiagonal entries of G_{n,n-2}; the first
// subdiagonal is filled by the caller.
RationalMatrix second_block_outer(const HypergeometricPDE& p, int n, const R& w2, const R& w3) {
  RationalMatrix G(n + 1, n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const R t1 = R(n - i) * p.b1 + R(2 * (i - 1)) * p.c3 + p.f1;
    const R t2 = R(n - i - 1) * p.b1 + R(2 * (i - 1)) * p.c3 + p.f1;
    G(i - 1, i - 1) = R((n - i) * (n + 1 - i)) / (R(2) * w2 * w3) * (w2 * p.c1 + t1 * t2);
    const R u1 = R(i - 1) * p.b2 + R(2 * (n - i - 1)) * p.b3 + p.f2;
    const R u2 = R(i) * p.b2 + R(2 * (n - i - 1)) * p.b3 + p.f2;
    G(i + 1, i - 1) = R(i * (i + 1)) / (R(2) * w2 * w3) * (w2 * p.c2 + u1 * u2);
  }
  return G;
}

// Common part of the g_{i+1,i} bracket, before the (n-1-i) term.
R mixed_head(const HypergeometricPDE& p, int n, int i, const R& w2) {
  return p.f1 * p.f2 + p.d3 * w2 +
         p.b3 * (R(2 * (n - 2 + 2 * (i - 2) * (n - i - 1))) * p.c3 + R(2 * n - 2 * i - 1) * p.f1) +
         R(2 * i - 1) * p.c3 * p.f2 + R(i - 1) * p.b2 * (R(2 * i - 1) * p.c3 + p.f1);
}

RationalMatrix second_block(const HypergeometricPDE& p, int n, bool printed) {
  const R w2 = varpi_nonzero(p, 2 * n - 2);
  const R w3 = varpi_nonzero(p, 2 * n - 3);
  RationalMatrix G = second_block_outer(p, n, w2, w3);
  for (int i = 1; i <= n - 1; ++i) {
    const R inner = R(i - 1) * p.b2 + R(2 * n - 2 * i - 1) * p.b3 + p.f2;
    const R tail = printed ? inner : p.b1 * inner + R(4) * p.b3 * p.c3;
    G(i, i - 1) = R(i * (n - i)) / (w2 * w3) * (mixed_head(p, n, i, w2) + R(n - 1 - i) * tail);
  }
  return G;
}

}  // namespace

std::pair<RationalMatrix, std::optional<RationalMatrix>> subleading_matrices(
    const HypergeometricPDE& pde, int n) {
  if (n < 1) throw std::invalid_argument("subleading_matrices: degree must be positive");
  std::optional<RationalMatrix> second;
  if (n >= 2) second = second_block(pde, n, false);
  return {first_block(pde, n), second};
}

RationalMatrix subleading_second_printed(const HypergeometricPDE& pde, int n) {
  if (n < 2) throw std::invalid_argument("subleading_second_printed: degree must be >= 2");
  return second_block(pde, n, true);
}

namespace {

// G_{m,m-1} and G_{m,m-2} with zero-sized shapes at the boundary (m <= 1).
RationalMatrix g1(const HypergeometricPDE& p, int m) {
  if (m < 1) return RationalMatrix(m + 1, 0);
  return first_block(p, m);
}

RationalMatrix g2(const HypergeometricPDE& p, int m) {
  if (m < 2) return RationalMatrix(m + 1, m >= 1 ? m - 1 : 0);
  return second_block(p, m, false);
}

RationalMatrix c1_closed(const HypergeometricPDE& p, Axis j, bool printed) {
  varpi_nonzero(p, 0);
  const R den = p.e * p.e * varpi_nonzero(p, 1);
  const R mixed_tail = p.b3 * p.e * p.f1 + p.c3 * p.e * p.f2 - p.a * p.f1 * p.f2;
  const R mixed = (-p.d3 * p.e * p.e + mixed_tail) / den;
  if (j == Axis::x) {
    const R top = (-p.c1 * p.e * p.e + p.f1 * (p.b1 * p.e - p.a * p.f1)) / den;
    return RationalMatrix{{top}, {mixed}};
  }
  const R top = printed ? (-p.d3 * p.f1 * p.f1 + mixed_tail) / den : mixed;
  const R bottom = (-p.c2 * p.e * p.e + p.f2 * (p.b2 * p.e - p.a * p.f2)) / den;
  return RationalMatrix{{top}, {bottom}};
}

}  // namespace

RationalMatrix monic_c12_printed(const HypergeometricPDE& pde) {
  return c1_closed(pde, Axis::y, true);
}

TtrrSet monic_ttrr(const HypergeometricPDE& pde, int n) {
  if (n < 0) throw std::invalid_argument("monic_ttrr: negative degree");
  TtrrSet t;
  t.n = n;
  for (Axis j : kAxes) {
    const std::size_t s = slot(j);
    const RationalMatrix L = shift_matrix(n, j);
    t.A[s] = L;
    if (n == 0) {
      const R e = varpi_nonzero(pde, 0);
      t.B[s] = RationalMatrix{{-(j == Axis::x ? pde.f1 : pde.f2) / e}};
      t.C[s] = RationalMatrix(1, 0);
      continue;
    }
    const RationalMatrix G1n = g1(pde, n);
    t.B[s] = G1n * shift_matrix(n - 1, j) - L * g1(pde, n + 1);
    if (n == 1) {
      t.C[s] = c1_closed(pde, j, false);
    } else {
      t.C[s] = g2(pde, n) * shift_matrix(n - 2, j) - L * g2(pde, n + 1) - t.B[s] * G1n;
    }
  }
  return t;
}

PolyVector solve_monic_direct(const HypergeometricPDE& pde, int n) {
  if (n < 0) throw std::invalid_argument("solve_monic_direct: negative degree");
  // (D + lambda_n) x^p y^q = (lambda_n - lambda_{p+q}) x^p y^q + lower degree,
  // so corrections can be chosen one homogeneous degree at a time.
  const DerivedEquation eq = derived_pde(pde, 0, 0, n);
  const R lam = pde.eigenvalue(n);
  PolyVector out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    BivariatePoly P = BivariatePoly::monomial(n - k, k);
    BivariatePoly res = apply_operator(eq, P);
    for (int d = n - 1; d >= 0; --d) {
      const BivariatePoly top = res.homogeneous_part(d);
      if (top.is_zero()) continue;
      const R pivot = lam - pde.eigenvalue(d);
      if (pivot.is_zero()) throw NotAdmissible(n + d - 1);
      BivariatePoly corr;
      for (const auto& [m, c] : top.terms()) corr.add_term(m.x, m.y, -c / pivot);
      P += corr;
      res += apply_operator(eq, corr);
    }
    if (!res.is_zero()) throw NotAdmissible(n - 1);
    out.push_back(std::move(P));
  }
  return out;
}

MonicFamily build_monic(const HypergeometricPDE& pde, int N, bool cross_check) {
  if (N < 0) throw std::invalid_argument("build_monic: negative degree");
  check_admissible(pde, N);
  if (!is_potentially_self_adjoint(pde)) throw NotSelfAdjoint();
  std::vector<PolyVector> vecs;
  vecs.push_back(PolyVector{BivariatePoly(1)});
  PolyVector prev;
  for (int n = 0; n < N; ++n) {
    const TtrrSet t = monic_ttrr(pde, n);
    const PolyVector& cur = vecs.back();
    const RationalMatrix Bj = vstack(t.B[0], t.B[1]);
    const RationalMatrix Cj = vstack(t.C[0], t.C[1]);
    PolyVector stacked;
    stacked.reserve(2 * cur.size());
    for (const auto& p : cur) stacked.push_back(BivariatePoly::x() * p);
    for (const auto& p : cur) stacked.push_back(BivariatePoly::y() * p);
    PolyVector rhs = stacked - Bj * cur;
    if (n >= 1) rhs = rhs - Cj * prev;
    PolyVector next = joint_left_inverse(n) * rhs;
    prev = cur;
    vecs.push_back(std::move(next));
  }
  if (cross_check) {
    for (int n = 1; n <= N; ++n) {
      if (vecs[n] != solve_monic_direct(pde, n)) throw RecurrenceMismatch(n);
    }
  }
  return MonicFamily{pde, VectorFamily(std::move(vecs))};
}

PolyVector pde_residual(const MonicFamily& fam, int n) {
  const DerivedEquation eq = derived_pde(fam.pde, 0, 0, n);
  PolyVector out;
  for (const auto& p : fam[n]) out.push_back(apply_operator(eq, p));
  return out;
}

}  // namespace opde
