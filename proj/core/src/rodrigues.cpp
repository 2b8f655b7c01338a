#include "opde/rodrigues.hpp"

#include <stdexcept>

#include "opde/errors.hpp"
#include "opde/structural.hpp"

namespace opde {

WeightedExpr weighted(const WeightSpec& w, const BivariatePoly& poly) {
  WeightedExpr e;
  e.basis = {BivariatePoly::x(), BivariatePoly::y()};
  e.exponents = {w.u, w.v};
  for (const auto& [q, k] : w.factors) {
    e.basis.push_back(q);
    e.exponents.push_back(k);
  }
  e.poly = poly;
  return e;
}

WeightedExpr weighted_diff(const WeightedExpr& expr, Axis axis) {
  const std::size_t k = expr.basis.size();
  std::vector<std::size_t> active;
  std::vector<BivariatePoly> deriv(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (expr.exponents[i].is_zero()) continue;
    deriv[i] = expr.basis[i].diff(axis);
    if (!deriv[i].is_zero()) active.push_back(i);
  }
  WeightedExpr out = expr;
  BivariatePoly prod(1);
  for (std::size_t i : active) prod = prod * expr.basis[i];
  BivariatePoly poly = prod * expr.poly.diff(axis);
  for (std::size_t i : active) {
    BivariatePoly term = expr.exponents[i] * (deriv[i] * expr.poly);
    for (std::size_t j : active) {
      if (j != i) term = term * expr.basis[j];
    }
    poly += term;
    out.exponents[i] -= Rational(1);
  }
  out.poly = std::move(poly);
  return out;
}

BivariatePoly strip_factors(const WeightedExpr& expr, const std::vector<Rational>& d) {
  if (d.size() != expr.basis.size()) throw std::invalid_argument("strip_factors: size mismatch");
  BivariatePoly poly = expr.poly;
  BivariatePoly divisor(1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational rest = expr.exponents[i] - d[i];
    if (rest.is_zero()) continue;
    if (!rest.is_integer()) {
      throw NotReducible("factor " + expr.basis[i].str() + " keeps exponent " + rest.str());
    }
    const long k = rest.to_long();
    if (k > 0) {
      poly = poly * expr.basis[i].pow(static_cast<int>(k));
    } else {
      divisor = divisor * expr.basis[i].pow(static_cast<int>(-k));
    }
  }
  try {
    return exact_divide(poly, divisor);
  } catch (const NotDivisible&) {
    throw NotReducible("weight factors do not cancel from the derivative");
  }
}

namespace {

BivariatePoly differentiate_and_strip(const WeightSpec& w, const BivariatePoly& poly, int nx,
                                      int ny) {
  WeightedExpr e = weighted(w, poly);
  const std::vector<Rational> start = e.exponents;
  for (int i = 0; i < nx; ++i) e = weighted_diff(e, Axis::x);
  for (int i = 0; i < ny; ++i) e = weighted_diff(e, Axis::y);
  return strip_factors(e, start);
}

void check_degree(const BivariatePoly& p, int expected) {
  const int got = p.degree().value_or(-1);
  if (got != expected) throw DegreeMismatch(expected, got);
}

}  // namespace

BivariatePoly rodrigues_eval(const WeightSpec& w, const PhiCase& c, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("rodrigues_eval: negative order");
  const BivariatePoly p = differentiate_and_strip(w, c.phi10.pow(n) * c.phi01.pow(m), n, m);
  check_degree(p, n + m);
  return p;
}

BivariatePoly rodrigues_derivative_eval(const WeightSpec& w, const PhiCase& c, int n, int m, int r,
                                        int s) {
  if (r < 0 || s < 0 || r > n || s > m) {
    throw std::invalid_argument("rodrigues_derivative_eval: need 0 <= r <= n, 0 <= s <= m");
  }
  const BivariatePoly prs = phi_rs(c, r, s);
  const BivariatePoly inner =
      differentiate_and_strip(w, prs * c.phi10.pow(n - r) * c.phi01.pow(m - s), n - r, m - s);
  BivariatePoly p;
  try {
    p = exact_divide(inner, prs);
  } catch (const NotDivisible&) {
    throw NotReducible("phi^(r,s) does not divide the derivative");
  }
  check_degree(p, n + m - r - s);
  return p;
}

PolyVector rodrigues_vector(const WeightSpec& w, const PhiCase& c, int N) {
  PolyVector v;
  for (int l = 0; l <= N; ++l) v.push_back(rodrigues_eval(w, c, N - l, l));
  return v;
}

RationalMatrix solve_connection(const PolyVector& v, const PolyVector& basis) {
  const int N = static_cast<int>(basis.size()) - 1;
  const RationalMatrix lead_v = expansion_matrices(v, N)[N];
  const RationalMatrix lead_b = expansion_matrices(basis, N)[N];
  RationalMatrix M;
  try {
    M = lead_v * lead_b.inverse();
  } catch (const std::domain_error&) {
    throw NotReducible("leading block of the basis is singular");
  }
  if (!is_zero(v - M * basis)) throw NotReducible("vector is not in the span of the basis");
  return M;
}

}  // namespace opde
