#include "opde/structural.hpp"

#include <stdexcept>

#include "opde/errors.hpp"

namespace opde {

RationalMatrix shift_matrix(int n, Axis axis) {
  if (n < 0) throw std::invalid_argument("shift_matrix: negative degree");
  RationalMatrix L(n + 1, n + 2);
  // x * x^{n-k} y^k sits at position k of x^{n+1}; y * x^{n-k} y^k at k+1.
  const int offset = axis == Axis::x ? 0 : 1;
  for (int k = 0; k <= n; ++k) L(k, k + offset) = Rational(1);
  return L;
}

RationalMatrix joint_shift_matrix(int n) {
  return vstack(shift_matrix(n, Axis::x), shift_matrix(n, Axis::y));
}

RationalMatrix derivative_matrix(int n, Axis axis) {
  if (n < 1) throw std::invalid_argument("derivative_matrix: degree must be positive");
  RationalMatrix E(n + 1, n);
  if (axis == Axis::x) {
    for (int i = 0; i < n; ++i) E(i, i) = Rational(n - i);
  } else {
    for (int i = 0; i < n; ++i) E(i + 1, i) = Rational(i + 1);
  }
  return E;
}

RationalMatrix joint_left_inverse(int n) {
  const RationalMatrix L = joint_shift_matrix(n);
  const RationalMatrix Lt = L.transpose();
  return (Lt * L).inverse() * Lt;
}

std::vector<RationalMatrix> expansion_matrices(const PolyVector& v, int n) {
  if (n < 0) throw std::invalid_argument("expansion_matrices: negative degree");
  std::vector<RationalMatrix> G;
  G.reserve(n + 1);
  for (int k = 0; k <= n; ++k) G.emplace_back(v.size(), k + 1);
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (const auto& [m, c] : v[r].terms()) {
      if (m.total() > n) throw DegreeOverflow(static_cast<int>(r), m.total(), n);
      G[m.total()](r, m.y) = c;
    }
  }
  return G;
}

PolyVector reconstruct(const std::vector<RationalMatrix>& G) {
  if (G.empty()) return {};
  PolyVector out(G.front().rows());
  for (std::size_t k = 0; k < G.size(); ++k) {
    const PolyVector part = G[k] * monomial_vector(static_cast<int>(k));
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += part[r];
  }
  return out;
}

VectorFamily::VectorFamily(std::vector<PolyVector> vectors) : vectors_(std::move(vectors)) {
  for (std::size_t n = 0; n < vectors_.size(); ++n) {
    if (vectors_[n].size() != n + 1) throw std::invalid_argument("family vector has wrong length");
    expansions_.push_back(expansion_matrices(vectors_[n], static_cast<int>(n)));
  }
}

const PolyVector& VectorFamily::operator[](int n) const {
  static const PolyVector empty;
  if (n == -1) return empty;
  if (n < -1 || n > max_degree()) throw std::out_of_range("family degree out of range");
  return vectors_[n];
}

RationalMatrix VectorFamily::G(int n, int k) const {
  if (n > max_degree()) throw std::out_of_range("family degree out of range");
  if (n < 0) return RationalMatrix(0, k < 0 ? 0 : k + 1);
  if (k < 0) return RationalMatrix(n + 1, 0);
  if (k > n) return RationalMatrix(n + 1, k + 1);
  return expansions_[n][k];
}

}  // namespace opde
