#pragma once

#include <stdexcept>
#include <string>

namespace opde {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial is not exactly divisible") {}
};

class DivisionByZeroPoly : public Error {
 public:
  DivisionByZeroPoly() : Error("division by the zero polynomial") {}
};

class DegreeOverflow : public Error {
 public:
  DegreeOverflow(int entry, int degree, int bound)
      : Error("entry " + std::to_string(entry) + " has total degree " +
              std::to_string(degree) + " > " + std::to_string(bound)) {}
};

/// Raised when a*k + e vanishes for some nonnegative integer k.
class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(long k)
      : Error("equation is not admissible: a*k + e = 0 at k = " + std::to_string(k)), k_(k) {}
  long k() const noexcept { return k_; }

 private:
  long k_;
};

class NotSelfAdjoint : public Error {
 public:
  NotSelfAdjoint() : Error("operator is not potentially self-adjoint") {}
};

class DegenerateDiscriminant : public Error {
 public:
  DegenerateDiscriminant() : Error("discriminant vanishes identically") {}
};

class NoCaseMatches : public Error {
 public:
  explicit NoCaseMatches(const std::string& what = "no weight-factor case matches the equation")
      : Error(what) {}
};

class NonPolynomialPhi : public Error {
 public:
  explicit NonPolynomialPhi(const std::string& case_id)
      : Error("case (" + case_id + "): weight factor quotient is not a polynomial") {}
};

class SingularLeading : public Error {
 public:
  explicit SingularLeading(int degree)
      : Error("leading coefficient matrix of degree " + std::to_string(degree) + " is singular"),
        degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class NotReducible : public Error {
 public:
  explicit NotReducible(const std::string& what) : Error("not reducible: " + what) {}
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int expected, int got)
      : Error("expected total degree " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class IndexOutOfPrintedRange : public Error {
 public:
  explicit IndexOutOfPrintedRange(const std::string& what) : Error(what) {}
};

/// The recurrence-built family disagrees with the direct eigen-solve.
class RecurrenceMismatch : public Error {
 public:
  explicit RecurrenceMismatch(int degree)
      : Error("recurrence output differs from the direct solution at degree " +
              std::to_string(degree)) {}
};

}  // namespace opde
