#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "opde/rational.hpp"

namespace opde {

/// Coordinate direction: x_1 = x, x_2 = y.
enum class Axis { x = 1, y = 2 };

inline constexpr Axis kAxes[] = {Axis::x, Axis::y};

inline int axis_index(Axis a) { return a == Axis::x ? 1 : 2; }

/// Exponent pair of x^i y^j.
struct Monomial {
  int x = 0;
  int y = 0;

  int total() const noexcept { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: total degree first, then the y exponent. Within one total
/// degree n this is the position order of the monomial vector (x^n, x^{n-1}y,
/// ..., y^n). Compatible with multiplication, so it is a monomial order.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.y < b.y;
  }
};

/// Exact polynomial in x and y over the rationals. No zero coefficient is ever
/// stored, so the zero polynomial has an empty term map and no degree.
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedOrder>;

  BivariatePoly() = default;
  BivariatePoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  BivariatePoly(long c) : BivariatePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static BivariatePoly x();
  static BivariatePoly y();
  static BivariatePoly var(Axis a) { return a == Axis::x ? x() : y(); }
  static BivariatePoly monomial(int i, int j, const Rational& c = Rational(1));
  /// Builds from (i, j, coefficient) triples; repeated keys are summed.
  static BivariatePoly from_terms(std::initializer_list<std::tuple<int, int, Rational>> terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// Largest exponent of the given variable; nullopt for zero.
  std::optional<int> degree_in(Axis a) const;

  Rational coeff(int i, int j) const;
  void add_term(int i, int j, const Rational& c);

  /// Homogeneous component of total degree k.
  BivariatePoly homogeneous_part(int k) const;

  /// Leading term under GradedOrder; precondition: nonzero.
  std::pair<Monomial, Rational> leading_term() const;
  /// Lowest term under GradedOrder; precondition: nonzero.
  std::pair<Monomial, Rational> trailing_term() const;

  BivariatePoly diff(Axis a) const;
  BivariatePoly pow(int k) const;
  Rational eval(const Rational& x, const Rational& y) const;
  /// Substitutes x -> xs, y -> ys.
  BivariatePoly compose(const BivariatePoly& xs, const BivariatePoly& ys) const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const Rational& c);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator-(BivariatePoly a) { return a *= Rational(-1); }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
  friend BivariatePoly operator*(const Rational& c, BivariatePoly a) { return a *= c; }

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Human readable form, e.g. "x^2 - 1/3*y + 2".
  std::string str() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p);

/// Returns r with p = q * r. Throws DivisionByZeroPoly for q = 0 and
/// NotDivisible when no polynomial quotient exists.
BivariatePoly exact_divide(const BivariatePoly& p, const BivariatePoly& q);

/// True when q divides p exactly (q nonzero).
bool divides(const BivariatePoly& q, const BivariatePoly& p);

/// Column vector of polynomials; the n-th member of a vector family has n+1
/// entries.
using PolyVector = std::vector<BivariatePoly>;

PolyVector diff(const PolyVector& v, Axis a);
PolyVector operator+(const PolyVector& a, const PolyVector& b);
PolyVector operator-(const PolyVector& a, const PolyVector& b);
PolyVector operator*(const BivariatePoly& s, const PolyVector& v);
bool is_zero(const PolyVector& v);
/// Largest entry degree; nullopt when every entry is zero.
std::optional<int> max_degree(const PolyVector& v);

/// The monomial vector (x^n, x^{n-1}y, ..., y^n).
PolyVector monomial_vector(int n);

}  // namespace opde
