#include <gtest/gtest.h>

#include "support.hpp"

using namespace ecval;
using ecval::testing::model;
using ecval::testing::point;

TEST(DivisionPolynomials, SmallValuesByHand) {
  const DivPolySequence s(model("0,0,0,0,1"), point("2,3"), 4);
  EXPECT_EQ(s.psi(0), Rational(0));
  EXPECT_EQ(s.psi(1), Rational(1));
  EXPECT_EQ(s.psi(2), Rational(6));
  EXPECT_EQ(s.psi(3), Rational(72));
  EXPECT_EQ(s.phi(1), Rational(2));
  EXPECT_EQ(s.phi(2), Rational(0));
  EXPECT_EQ(s.psi_sq(2), Rational(36));
}

TEST(DivisionPolynomials, TwoTorsionAndBadSizeRejected) {
  EXPECT_THROW(DivPolySequence(model("0,0,0,-1,0"), point("1,0"), 5), PreconditionError);
  EXPECT_THROW(DivPolySequence(model("0,0,0,0,-2"), point("3,5"), 0), InputError);
}

// x([n]P) psi_n^2 = phi_n, and the x-only forms of psi_2^2 and phi_2.
TEST(DivisionPolynomials, AgreeWithGroupLaw) {
  for (const auto& [a, xy] : {std::pair{"0,0,0,0,-2", "3,5"}, std::pair{"1,-1,1,-3,6", "1,1"},
                              std::pair{"0,1,1,-2,0", "0,0"}}) {
    const auto e = model(a);
    const auto P = point(xy);
    const DivPolySequence s(e, P, 20);
    CurvePoint nP = CurvePoint::infinity();
    for (int n = 1; n <= 20; ++n) {
      nP = add(e, nP, P);
      EXPECT_EQ(nP.x() * s.psi_sq(n), s.phi(n)) << a << " n=" << n;
    }
    EXPECT_EQ(s.psi_sq(2), psi2_sq_x_only(e, P.x()));
    EXPECT_EQ(s.phi(2), phi2_x_only(e, P.x()));
    EXPECT_EQ(s.psi(3), psi3_value(e, P.x()));
    EXPECT_EQ(phi_at(e, P, 7), s.phi(7));
  }
}

// psi_{m+n} psi_{m-n} psi_1^2 = psi_{m+1} psi_{m-1} psi_n^2 - psi_{n+1} psi_{n-1} psi_m^2.
TEST(DivisionPolynomials, EllipticDivisibilityIdentity) {
  const DivPolySequence s(model("0,0,1,-1,0"), point("0,0"), 24);
  for (int m = 2; m <= 12; ++m) {
    for (int n = 1; n < m; ++n) {
      EXPECT_EQ(s.psi(m + n) * s.psi(m - n),
                s.psi(m + 1) * s.psi(m - 1) * s.psi_sq(n) - s.psi(n + 1) * s.psi(n - 1) * s.psi_sq(m));
    }
  }
}

// psi_n(P) = u^{n^2-1} psi_n(P') under a change of variables with scale u.
TEST(DivisionPolynomials, ScalingUnderChangeOfVariables) {
  const auto e = model("0,0,0,0,-2");
  const auto P = point("3,5");
  const CoordinateChange c{Rational(3), Rational(1), Rational(2), Rational(-1)};
  const DivPolySequence s(e, P, 10);
  const DivPolySequence s2(apply_change(e, c), map_point(c, P), 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(s.psi(n), pow(Rational(3), n * n - 1) * s2.psi(n));
}
