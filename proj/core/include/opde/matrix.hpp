#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "opde/polynomial.hpp"
#include "opde/rational.hpp"

namespace opde {

/// Dense exact matrix. Zero-width or zero-height shapes are valid and are used
/// for the empty blocks at the low-degree boundary (e.g. C_{0,j} is 1x0).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j);
  const Rational& at(std::size_t i, std::size_t j) const;

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  /// Gauss-Jordan inverse. Throws std::domain_error when singular.
  RationalMatrix inverse() const;
  /// Fraction-free (Bareiss) determinant.
  Rational determinant() const;
  /// Rank by fraction-free elimination.
  std::size_t rank() const;

  /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator-(RationalMatrix a) { return a *= Rational(-1); }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Vertical concatenation; column counts must agree.
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);
/// Horizontal concatenation; row counts must agree.
RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);

/// Matrix-vector product M * v over polynomials.
PolyVector operator*(const RationalMatrix& m, const PolyVector& v);

}  // namespace opde
