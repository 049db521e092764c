#include "ecval/divpoly.hpp"

#include <algorithm>

namespace ecval {

Rational psi2_value(const WeierstrassModel& e, const AffinePoint& P) {
  return Rational(2) * P.y + e.a1() * P.x + e.a3();
}

Rational psi3_value(const WeierstrassModel& e, const Rational& x) {
  const auto& d = e.derived();
  return (((Rational(3) * x + d.b2) * x + Rational(3) * d.b4) * x + Rational(3) * d.b6) * x + d.b8;
}

Rational psi2_sq_x_only(const WeierstrassModel& e, const Rational& x) {
  const auto& d = e.derived();
  return ((Rational(4) * x + d.b2) * x + Rational(2) * d.b4) * x + d.b6;
}

Rational phi2_x_only(const WeierstrassModel& e, const Rational& x) {
  const auto& d = e.derived();
  Rational x2 = x * x;
  return x2 * x2 - d.b4 * x2 - Rational(2) * d.b6 * x - d.b8;
}

DivPolySequence::DivPolySequence(const WeierstrassModel& e, const CurvePoint& P, int N)
    : model_(e), point_(P), N_(N) {
  if (N < 1) throw InputError("division polynomial table needs N >= 1");
  if (P.is_infinity()) throw PreconditionError("division polynomials need an affine point");
  require_on_curve(e, P);
  const auto& pt = P.affine();
  const Rational& x = pt.x;
  const auto& d = e.derived();

  Rational psi2 = psi2_value(e, pt);
  if (psi2.is_zero()) throw PreconditionError("point " + P.str() + " is 2-torsion (psi_2 = 0)");

  const int top = std::max(N + 1, 4);
  psi_.assign(static_cast<std::size_t>(top) + 2, Rational(0));
  auto at = [this](int n) -> Rational& { return psi_[static_cast<std::size_t>(n + 1)]; };
  at(-1) = Rational(-1);
  at(0) = Rational(0);
  at(1) = Rational(1);
  at(2) = psi2;
  at(3) = psi3_value(e, x);
  Rational quartic_tail = (((((Rational(2) * x + d.b2) * x + Rational(5) * d.b4) * x + Rational(10) * d.b6) * x +
                            Rational(10) * d.b8) * x + (d.b2 * d.b8 - d.b4 * d.b6)) * x +
                          (d.b4 * d.b8 - d.b6 * d.b6);
  at(4) = psi2 * quartic_tail;

  for (int n = 5; n <= top; ++n) {
    int m = n / 2;
    if (n % 2 == 1) {
      Rational pm = at(m);
      Rational pm1 = at(m + 1);
      at(n) = at(m + 2) * pm * pm * pm - at(m - 1) * pm1 * pm1 * pm1;
    } else {
      Rational pmm1 = at(m - 1);
      Rational pmp1 = at(m + 1);
      at(n) = at(m) * (at(m + 2) * pmm1 * pmm1 - at(m - 2) * pmp1 * pmp1) / psi2;
    }
  }

  phi_.assign(static_cast<std::size_t>(N) + 1, Rational(0));
  phi_[1] = x;
  for (int n = 2; n <= N; ++n) {
    phi_[static_cast<std::size_t>(n)] = x * at(n) * at(n) - at(n - 1) * at(n + 1);
  }
}

const Rational& DivPolySequence::psi(int n) const {
  if (n < -1 || n > N_ + 1) throw InputError("psi index out of range");
  return psi_[static_cast<std::size_t>(n + 1)];
}

const Rational& DivPolySequence::phi(int n) const {
  if (n < 1 || n > N_) throw InputError("phi index out of range");
  return phi_[static_cast<std::size_t>(n)];
}

DivPolySequence psi_sequence(const WeierstrassModel& e, const CurvePoint& P, int N) {
  return DivPolySequence(e, P, N);
}

Rational phi_at(const WeierstrassModel& e, const CurvePoint& P, int n) {
  DivPolySequence seq(e, P, n);
  Rational value = seq.phi(n);
  if (n == 2 && value != phi2_x_only(e, P.x())) {
    throw InternalError("phi_2 recurrence disagrees with the x-only quartic");
  }
  return value;
}

}  // namespace ecval
