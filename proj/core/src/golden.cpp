#include "opde/golden.hpp"

#include <string>

#include "opde/errors.hpp"

namespace opde {

namespace {

using R = Rational;

struct Ctx {
  R al, be;
  int n;
  R N;  // n as a rational
  // Common denominators.
  R d1() const { return (R(2) * N - 1 + al + be) * (R(2) * N + 1 + al + be); }
  R d2() const {
    const R m = R(2) * N - 1 + al + be;
    return (R(2) * N + al + be) * m * m * (R(2) * N - 2 + al + be);
  }
};

RationalMatrix B1(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  RationalMatrix M(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    const R I(i);
    M(i, i) = -(N - I) * (al + N - 1 - I) / (R(2) * N - 1 + al + be) +
              (N + 1 - I) * (al + N - I) / (R(2) * N + 1 + al + be);
  }
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i + 1, i) = -(R(2) * (I + 1) * (be + I)) / c.d1();
  }
  return M;
}

RationalMatrix B2(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  RationalMatrix M(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    const R I(i);
    M(i, i) = R(1) + I * (R(2) * N - I + al) / (R(2) * N - 1 + al + be) -
              (I + 1) * (al + R(2) * N + 1 - I) / (R(2) * N + 1 + al + be);
  }
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i, i + 1) = -(R(2) * (N - I) * (al + N - 1 - I)) / c.d1();
  }
  return M;
}

RationalMatrix C1(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d2();
  RationalMatrix M(n + 1, n);
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i, i) = (N - I) * (al + N - 1 - I) * (N + I + be) * (N - 1 + I + al + be) / D;
    M(i + 1, i) = -((I + 1) * (be + I) *
                    (R(2) * (N - I - 1) * (N + I + be) + al * (R(2) * N + al + be - 2))) /
                  D;
  }
  for (int i = 0; i <= n - 2; ++i) {
    const R I(i);
    M(i + 2, i) = (I + 2) * (I + 1) * (be + I) * (be + I + 1) / D;
  }
  return M;
}

RationalMatrix C2(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d2();
  RationalMatrix M(n + 1, n);
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i, i) = -((N - I) * (al + N - 1 - I) *
                (be * (R(2) * N - 2 + be) + al * (R(2) * I + be) + R(2) * I * (R(2) * N - 1 - I))) /
              D;
    M(i + 1, i) = (I + 1) * (al + R(2) * N - 1 - I) * (be + I) * (al + be + R(2) * N - 2 - I) / D;
  }
  for (int i = 0; i <= n - 2; ++i) {
    const R I(i);
    M(i, i + 1) = (N - I) * (N - 1 - I) * (al + N - 1 - I) * (al + N - 2 - I) / D;
  }
  return M;
}

RationalMatrix W(const Ctx& c, bool second) {
  const int n = c.n;
  RationalMatrix M(n + 1, n + 2);
  for (int i = 0; i <= n; ++i) {
    const R w = second ? R(-i) : R(-n + i);
    M(i, i) = w;
    M(i, i + 1) = w;
  }
  return M;
}

RationalMatrix S1(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d1();
  RationalMatrix M(n + 1, n + 1);
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i, i) = -((N - I) * (-N + (R(2) * N - 1) * I - R(4) * I * I + (N - 2 - R(3) * I) * be +
                           al * (N - 1 + I + al + be))) /
              D;
    M(i, i + 1) = -((N - I) * (N - 1 - I + al) * (R(2) * I + 1 + al + be)) / D;
  }
  for (int i = 0; i <= n - 2; ++i) {
    const R I(i);
    M(i + 1, i) = R(2) * (I + 1) * (N - 1 - I) * (be + I) / D;
  }
  return M;
}

RationalMatrix S2(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d1();
  RationalMatrix M(n + 1, n + 1);
  for (int i = 1; i <= n; ++i) {
    const R I(i);
    M(i, i) = I *
              (be - be * be - I + be * I + R(4) * I * I - al * (R(-2) + be + R(3) * I - R(2) * N) -
               R(2) * (R(-1) + be + R(3) * I) * N + R(2) * N * N) /
              D;
  }
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i + 1, i) = -((R(1) + I) * (be + I) * (R(-1) + al + be - R(2) * I + R(2) * N)) / D;
    M(i, i + 1) = R(2) * I * (-I + N) * (R(-1) + al - I + N) / D;
  }
  return M;
}

RationalMatrix T1(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d2();
  RationalMatrix M(n + 1, n);
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    const R bracket = be * be * (R(1) + I) + I * I * (R(1) + R(3) * I) + al * be * (R(1) + N) +
                      al * al * (-I + N) + be * (I * (R(3) + R(4) * I) + N * (R(-2) * I + N)) +
                      N * (-((R(-2) + I) * I) + N * (R(-1) - I + N)) +
                      al * (I * (R(2) + I) + N * (R(-1) - R(2) * I + R(2) * N));
    M(i, i) = (N - I) * (N - 1 + al - I) / D * bracket;
  }
  for (int i = 0; i <= n - 2; ++i) {
    const R I(i);
    M(i, i + 1) =
        (N - I) * (N - I - 1) * (al + N - 2 - I) * (al + N - I - 1) * (al + be + N + I) / D;
    M(i + 1, i) = (be + I) * (N - I - 1) * (I + 1) / D *
                  (al * (al + be + N + I - 1) + be * (N - R(2) * I - 3) +
                   (R(-2) + (R(2) * N - 5) * I - R(3) * I * I));
  }
  for (int i = 0; i <= n - 3; ++i) {
    const R I(i);
    M(i + 2, i) = -((be + I) * (be + I + 1) * (N - I - 2) * (I + 1) * (I + 2)) / D;
  }
  return M;
}

RationalMatrix T2(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d2();
  RationalMatrix M(n + 1, n);
  for (int i = 1; i <= n - 1; ++i) {
    const R I(i);
    M(i, i) = I * (-I + N) * (R(-1) + al - I + N) / D *
              (al * be + be * be - I * (R(1) + R(3) * I - R(4) * N) - be * (R(2) + I - R(2) * N) +
               al * (R(-1) + R(2) * I - N) - N * (R(1) + N));
  }
  for (int i = 1; i <= n - 2; ++i) {
    const R I(i);
    M(i, i + 1) = -(I * (R(-1) - I + N) * (-I + N) * (R(-2) + al - I + N) * (R(-1) + al - I + N)) / D;
  }
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    const R J = R(1) + I;
    M(i + 1, i) = J * (be + I) / D *
                  (R(-3) * J * J * J + (R(1) + N) * (al + N) * (al + be + R(2) * N) +
                   J * J * (R(1) + R(4) * al + be + R(8) * N) -
                   J * (al * (R(3) + al) - (R(-2) + be) * be + R(4) * N + R(6) * al * N +
                        R(6) * N * N));
  }
  for (int i = 0; i <= n - 2; ++i) {
    const R I(i);
    M(i + 2, i) =
        (R(1) + I) * (R(2) + I) * (be + I) * (R(1) + be + I) * (R(-2) + al + be - I + R(2) * N) / D;
  }
  return M;
}

RationalMatrix V(const Ctx& c, bool second) {
  const int n = c.n;
  RationalMatrix M(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) M(i, i) = second ? R(1, i + 1) : R(1, n + 1 - i);
  return M;
}

RationalMatrix Y1(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d1();
  RationalMatrix M(n + 1, n);
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i, i) = (R(2) * I + 1 - al + be) / D;
    M(i + 1, i) = -(R(2) * (I + 1) * (be + I)) / ((N - I) * D);
  }
  return M;
}

RationalMatrix Y2(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d1();
  RationalMatrix M(n + 1, n);
  for (int i = 0; i <= n - 1; ++i) {
    const R I(i);
    M(i, i) = -(R(2) * (N - I) * (N - 1 - I + al)) / ((R(1) + I) * D);
    M(i + 1, i) = (R(2) * N - 1 - R(2) * I + al - be) / D;
  }
  return M;
}

RationalMatrix Z1(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d2();
  RationalMatrix M(n + 1, n - 1);
  for (int i = 0; i <= n - 2; ++i) {
    const R I(i);
    M(i, i) = -((N - I) * (N - 1 - I + al) * (N + I + be)) / D;
    M(i + 1, i) = (I + 1) * (R(-2) * (I + 1) + al - be) * (be + I) / D;
    M(i + 2, i) = (I + 1) * (I + 2) * (be + I) * (be + I + 1) / ((N - 1 - I) * D);
  }
  return M;
}

RationalMatrix Z2(const Ctx& c) {
  const int n = c.n;
  const R &al = c.al, &be = c.be, &N = c.N;
  const R D = c.d2();
  RationalMatrix M(n + 1, n - 1);
  for (int i = 0; i <= n - 2; ++i) {
    const R I(i);
    M(i, i) = (R(-1) - I + N) * (-I + N) * (R(-2) + al - I + N) * (R(-1) + al - I + N) /
              ((R(1) + I) * D);
    M(i + 1, i) =
        -((R(-1) - I + N) * (R(-2) + al - I + N) * (al - be + R(2) * (R(-1) - I + N)) / D);
    M(i + 2, i) = -((R(2) + I) * (R(1) + be + I) * (R(-2) + al - I + R(2) * N)) / D;
  }
  return M;
}

}  // namespace

std::string_view golden_name(GoldenKind k) {
  switch (k) {
    case GoldenKind::B1: return "B1";
    case GoldenKind::B2: return "B2";
    case GoldenKind::C1: return "C1";
    case GoldenKind::C2: return "C2";
    case GoldenKind::W1: return "W1";
    case GoldenKind::W2: return "W2";
    case GoldenKind::S1: return "S1";
    case GoldenKind::S2: return "S2";
    case GoldenKind::T1: return "T1";
    case GoldenKind::T2: return "T2";
    case GoldenKind::V1: return "V1";
    case GoldenKind::V2: return "V2";
    case GoldenKind::Y1: return "Y1";
    case GoldenKind::Y2: return "Y2";
    case GoldenKind::Z1: return "Z1";
    case GoldenKind::Z2: return "Z2";
  }
  return "?";
}

int golden_min_degree(GoldenKind k) {
  switch (k) {
    case GoldenKind::B1:
    case GoldenKind::B2: return 0;
    case GoldenKind::V1:
    case GoldenKind::V2:
    case GoldenKind::Y1:
    case GoldenKind::Y2:
    case GoldenKind::Z1:
    case GoldenKind::Z2: return 2;
    default: return 1;
  }
}

RationalMatrix golden_matrix(const AppellParams& p, int n, GoldenKind which) {
  if (n < golden_min_degree(which)) {
    throw IndexOutOfPrintedRange(std::string(golden_name(which)) + " is stated for n >= " +
                                 std::to_string(golden_min_degree(which)));
  }
  const Ctx c{p.alpha, p.beta, n, R(n)};
  switch (which) {
    case GoldenKind::B1: return B1(c);
    case GoldenKind::B2: return B2(c);
    case GoldenKind::C1: return C1(c);
    case GoldenKind::C2: return C2(c);
    case GoldenKind::W1: return W(c, false);
    case GoldenKind::W2: return W(c, true);
    case GoldenKind::S1: return S1(c);
    case GoldenKind::S2: return S2(c);
    case GoldenKind::T1: return T1(c);
    case GoldenKind::T2: return T2(c);
    case GoldenKind::V1: return V(c, false);
    case GoldenKind::V2: return V(c, true);
    case GoldenKind::Y1: return Y1(c);
    case GoldenKind::Y2: return Y2(c);
    case GoldenKind::Z1: return Z1(c);
    case GoldenKind::Z2: return Z2(c);
  }
  throw std::invalid_argument("unknown golden matrix");
}

}  // namespace opde
