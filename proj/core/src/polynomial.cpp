#include "opde/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "opde/errors.hpp"

namespace opde {

BivariatePoly::BivariatePoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BivariatePoly BivariatePoly::x() { return monomial(1, 0); }
BivariatePoly BivariatePoly::y() { return monomial(0, 1); }

BivariatePoly BivariatePoly::monomial(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  BivariatePoly p;
  p.add_term(i, j, c);
  return p;
}

BivariatePoly BivariatePoly::from_terms(
    std::initializer_list<std::tuple<int, int, Rational>> terms) {
  BivariatePoly p;
  for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
  return p;
}

std::optional<int> BivariatePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.total();
}

std::optional<int> BivariatePoly::degree_in(Axis a) const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, a == Axis::x ? m.x : m.y);
  return d;
}

Rational BivariatePoly::coeff(int i, int j) const {
  const auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivariatePoly BivariatePoly::homogeneous_part(int k) const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) {
    if (m.total() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::pair<Monomial, Rational> BivariatePoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

std::pair<Monomial, Rational> BivariatePoly::trailing_term() const {
  if (terms_.empty()) throw std::logic_error("trailing term of zero polynomial");
  return *terms_.begin();
}

BivariatePoly BivariatePoly::diff(Axis a) const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) {
    const int e = a == Axis::x ? m.x : m.y;
    if (e == 0) continue;
    if (a == Axis::x) {
      out.add_term(m.x - 1, m.y, c * Rational(e));
    } else {
      out.add_term(m.x, m.y - 1, c * Rational(e));
    }
  }
  return out;
}

BivariatePoly BivariatePoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  BivariatePoly result(1);
  BivariatePoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < m.x; ++i) t *= x;
    for (int j = 0; j < m.y; ++j) t *= y;
    sum += t;
  }
  return sum;
}

BivariatePoly BivariatePoly::compose(const BivariatePoly& xs, const BivariatePoly& ys) const {
  if (terms_.empty()) return {};
  const int dx = *degree_in(Axis::x);
  const int dy = *degree_in(Axis::y);
  std::vector<BivariatePoly> xpow{BivariatePoly(1)};
  std::vector<BivariatePoly> ypow{BivariatePoly(1)};
  for (int i = 1; i <= dx; ++i) xpow.push_back(xpow.back() * xs);
  for (int j = 1; j <= dy; ++j) ypow.push_back(ypow.back() * ys);
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out += c * (xpow[m.x] * ypow[m.y]);
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Dense accumulation over the exponent box, then compress.
  const int ax = *a.degree_in(Axis::x), ay = *a.degree_in(Axis::y);
  const int bx = *b.degree_in(Axis::x), by = *b.degree_in(Axis::y);
  const int w = ax + bx + 1, h = ay + by + 1;
  std::vector<mpq_class> acc(static_cast<std::size_t>(w) * h);
  std::vector<char> used(acc.size(), 0);
  mpq_class tmp;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const std::size_t idx = static_cast<std::size_t>(ma.x + mb.x) * h + (ma.y + mb.y);
      mpq_mul(tmp.get_mpq_t(), ca.get().get_mpq_t(), cb.get().get_mpq_t());
      acc[idx] += tmp;
      used[idx] = 1;
    }
  }
  BivariatePoly out;
  for (int i = 0; i < w; ++i) {
    for (int j = 0; j < h; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i) * h + j;
      if (used[idx] && sgn(acc[idx]) != 0) out.add_term(i, j, Rational(acc[idx]));
    }
  }
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m) {
  bool first = true;
  auto factor = [&](char v, int e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << v;
    if (e > 1) os << '^' << e;
    first = false;
  };
  factor('x', m.x);
  factor('y', m.y);
}

}  // namespace

std::string BivariatePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.total() == 0) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      append_monomial(os, m);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) { return os << p.str(); }

BivariatePoly exact_divide(const BivariatePoly& p, const BivariatePoly& q) {
  if (q.is_zero()) throw DivisionByZeroPoly();
  const auto [lq, cq] = q.leading_term();
  BivariatePoly rem = p;
  BivariatePoly quot;
  while (!rem.is_zero()) {
    const auto [lr, cr] = rem.leading_term();
    if (lr.x < lq.x || lr.y < lq.y) throw NotDivisible();
    const BivariatePoly t = BivariatePoly::monomial(lr.x - lq.x, lr.y - lq.y, cr / cq);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

bool divides(const BivariatePoly& q, const BivariatePoly& p) {
  try {
    (void)exact_divide(p, q);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

PolyVector diff(const PolyVector& v, Axis a) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.diff(a));
  return out;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  PolyVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

PolyVector operator-(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  PolyVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

PolyVector operator*(const BivariatePoly& s, const PolyVector& v) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(s * p);
  return out;
}

bool is_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BivariatePoly& p) { return p.is_zero(); });
}

std::optional<int> max_degree(const PolyVector& v) {
  std::optional<int> d;
  for (const auto& p : v) {
    const auto pd = p.degree();
    if (pd && (!d || *pd > *d)) d = pd;
  }
  return d;
}

PolyVector monomial_vector(int n) {
  if (n < 0) throw std::invalid_argument("monomial_vector: negative degree");
  PolyVector v;
  v.reserve(n + 1);
  for (int k = 0; k <= n; ++k) v.push_back(BivariatePoly::monomial(n - k, k));
  return v;
}

}  // namespace opde
