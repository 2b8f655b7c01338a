#include "opde/appell.hpp"

#include <stdexcept>

#include "opde/rodrigues.hpp"

namespace opde {

void AppellParams::validate() const {
  if (alpha.sign() <= 0 || beta.sign() <= 0) {
    throw std::invalid_argument("Appell parameters must be positive, got alpha=" + alpha.str() +
                                " beta=" + beta.str());
  }
}

HypergeometricPDE appell_pde(const AppellParams& p) {
  HypergeometricPDE pde;
  pde.a = Rational(-1);
  pde.b1 = Rational(1);
  pde.b2 = Rational(1);
  pde.e = -(p.alpha + p.beta + 1);
  pde.f1 = p.alpha;
  pde.f2 = p.beta;
  return pde;
}

std::optional<AppellParams> appell_params_of(const HypergeometricPDE& pde) {
  const AppellParams p{pde.f1, pde.f2};
  if (p.alpha.sign() <= 0 || p.beta.sign() <= 0 || !(appell_pde(p) == pde)) return std::nullopt;
  return p;
}

WeightSpec appell_weight(const AppellParams& p) {
  return WeightSpec{p.alpha - 1, p.beta - 1, {}};
}

Rational moment(const AppellParams& p, int i, int j) {
  return pochhammer(p.alpha, i) * pochhammer(p.beta, j) / pochhammer(p.alpha + p.beta + 1, i + j);
}

Rational apply_functional(const AppellParams& p, const BivariatePoly& q) {
  Rational total;
  for (const auto& [mono, c] : q.terms()) total += c * moment(p, mono.x, mono.y);
  return total;
}

RationalMatrix orthogonality_blocks(const AppellParams& p, const PolyVector& P, int m) {
  const PolyVector xm = monomial_vector(m);
  RationalMatrix M(m + 1, static_cast<int>(P.size()));
  for (int r = 0; r <= m; ++r) {
    for (int c = 0; c < static_cast<int>(P.size()); ++c) {
      M(r, c) = apply_functional(p, xm[r] * P[c]);
    }
  }
  return M;
}

BivariatePoly monic_appell_series(const AppellParams& p, int n, int m) {
  const Rational s = p.alpha + p.beta + n + m;
  Rational pre = pochhammer(p.alpha, n) * pochhammer(p.beta, m) / pochhammer(s, n + m);
  if ((n + m) % 2 != 0) pre = -pre;
  BivariatePoly out;
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= m; ++k) {
      const Rational c = pochhammer(s, j + k) * pochhammer(Rational(-n), j) *
                         pochhammer(Rational(-m), k) /
                         (pochhammer(p.alpha, j) * pochhammer(p.beta, k) * factorial(j) *
                          factorial(k));
      out.add_term(j, k, pre * c);
    }
  }
  return out;
}

PolyVector monic_appell_vector(const AppellParams& p, int N) {
  PolyVector v;
  for (int l = 0; l <= N; ++l) v.push_back(monic_appell_series(p, N - l, l));
  return v;
}

RationalMatrix connection_F(const AppellParams& p, int n) {
  RationalMatrix G(n + 1, n + 1);
  const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      G(i, j) = sign * binomial(n, j) * pochhammer(p.alpha + n - i, n - j) *
                pochhammer(p.beta + i, j) / (pochhammer(p.alpha, n - j) * pochhammer(p.beta, j));
    }
  }
  return G;
}

BivariatePoly nonmonic_F(const AppellParams& p, int n, int m) {
  const HypergeometricPDE pde = appell_pde(p);
  const BivariatePoly r = rodrigues_eval(appell_weight(p), select_phi(pde), n, m);
  return r * (Rational(1) / (pochhammer(p.alpha, n) * pochhammer(p.beta, m)));
}

PolyVector nonmonic_F_vector(const AppellParams& p, int N) {
  PolyVector v;
  for (int l = 0; l <= N; ++l) v.push_back(nonmonic_F(p, N - l, l));
  return v;
}

BivariatePoly jacobi(const Rational& a, const Rational& b, int n) {
  const BivariatePoly half_shift = (BivariatePoly::x() - BivariatePoly(Rational(1))) *
                                   BivariatePoly(Rational(1, 2));
  BivariatePoly out;
  BivariatePoly power(Rational(1));
  for (int k = 0; k <= n; ++k) {
    const Rational c = pochhammer(a + b + n + 1, k) * pochhammer(a + k + 1, n - k) /
                       (factorial(k) * factorial(n - k));
    out += power * BivariatePoly(c);
    power = power * half_shift;
  }
  return out;
}

BivariatePoly koornwinder(const AppellParams& p, int n, int m) {
  const BivariatePoly x = BivariatePoly::x();
  const BivariatePoly y = BivariatePoly::y();
  const BivariatePoly one(Rational(1));
  const BivariatePoly one_minus_x = one - x;

  const BivariatePoly inner = jacobi(Rational(0), p.beta - 1, m);
  const BivariatePoly num = y * BivariatePoly(Rational(2)) - one_minus_x;
  BivariatePoly homogenized;
  for (int k = 0; k <= m; ++k) {
    const Rational c = inner.coeff(k, 0);
    if (c.is_zero()) continue;
    homogenized += num.pow(k) * one_minus_x.pow(m - k) * BivariatePoly(c);
  }

  const BivariatePoly outer = jacobi(p.beta + 2 * m, p.alpha - 1, n)
                                  .compose(x * BivariatePoly(Rational(2)) - one, y);
  return outer * homogenized;
}

PolyVector koornwinder_vector(const AppellParams& p, int N) {
  PolyVector v;
  for (int l = 0; l <= N; ++l) v.push_back(koornwinder(p, N - l, l));
  return v;
}

RationalMatrix connection_K(const AppellParams& p, int n) {
  RationalMatrix G(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      G(i, j) = pochhammer(p.alpha + p.beta + n + i, n - i) * pochhammer(p.beta + j, i) /
                (factorial(n - i) * factorial(j) * factorial(i - j));
    }
  }
  return G;
}

}  // namespace opde
