#include "ecval/profile.hpp"

#include <algorithm>
#include <cmath>

#include "ecval/divpoly.hpp"

namespace ecval {

bool is_singular(const WeierstrassModel& e, const CurvePoint& P, Prime p) {
  if (P.is_infinity()) return false;
  const Rational& x = P.x();
  const Rational& y = P.y();
  if (val(x, p) < Valuation(0)) return false;
  const Valuation zero(0);
  const Rational fx = e.a1() * y - Rational(3) * x * x - Rational(2) * e.a2() * x - e.a4();
  const Rational fy = Rational(2) * y + e.a1() * x + e.a3();
  return val(fx, p) > zero && val(fy, p) > zero;
}

long n_p_search_cap(long p, int cv) {
  const long root = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(p))));
  return (p + 1 + 2 * root + 1) * cv;
}

long m_p_search_cap(const TateResult& tate) {
  long m = tate.kodaira.family == KodairaFamily::In ? tate.kodaira.m : 0;
  return std::max<long>(tate.cv, m) + 1;
}

ReductionProfile compute_profile(const TateResult& tate, const CurvePoint& P) {
  const Prime p(tate.p);
  const WeierstrassModel& e = tate.minimal_model;
  require_on_curve(e, P);
  if (P.is_infinity()) throw PreconditionError("the profile needs an affine point");
  require_infinite_order(e, P);

  ReductionProfile out(tate, P, map_point(tate.to_normalized, P));
  out.singular = is_singular(e, P, p);
  out.vX = val(P.x(), p);
  out.vXNormalized = val(out.normalized_point.x(), p);

  const long ncap = n_p_search_cap(p, tate.cv);
  CurvePoint Q = P;
  long n = 1;
  while (!(val(Q.x(), p) < Valuation(0))) {
    if (++n > ncap) throw InternalError("n_P search exceeded its cap");
    Q = add_unchecked(e, Q, P);
    if (Q.is_infinity()) throw PreconditionError("point has finite order");
  }
  out.nP = n;

  const long mcap = m_p_search_cap(tate);
  Q = P;
  n = 1;
  while (is_singular(e, Q, p)) {
    if (++n > mcap) throw InternalError("m_P search exceeded its cap");
    Q = add_unchecked(e, Q, P);
  }
  out.mP = n;

  if (out.singular && tate.reduction == ReductionKind::Multiplicative) {
    const long m = tate.kodaira.m;
    if (!tate.split.value_or(false)) {
      if (m % 2 != 0) throw InternalError("singular point on non-split I_m with m odd");
      out.aP = m / 2;
    } else {
      const Valuation vpsi2 = val(psi2_value(e, P.affine()), p);
      const long half = tate.vDelta.value() / 2;
      long a = vpsi2.is_infinite() ? half : std::min(vpsi2.value(), half);
      a = lnr(a, m);
      out.aP = std::min(a, m - a);
    }
  }

  const bool star = tate.kodaira.family == KodairaFamily::InStar ||
                    tate.kodaira.family == KodairaFamily::I0Star;
  if (out.singular && star && tate.cv == 4) {
    out.two_P_singular = is_singular(e, dbl(e, P), p);
  }

  const WeierstrassModel& en = tate.normalized_model;
  const Rational& xn = out.normalized_point.x();
  const Rational psi2 = psi2_value(en, out.normalized_point.affine());
  out.vPsi2Sq = val(psi2 * psi2, p);
  out.vPsi3 = val(psi3_value(en, xn), p);
  out.vPhi2 = val(phi2_x_only(en, xn), p);
  return out;
}

CoordinateChange input_to_minimal(const WeierstrassModel& e, const TateResult& tate, Prime p) {
  return integralizing_change(e, p).then(tate.to_minimal);
}

ReductionProfile profile_from_input(const WeierstrassModel& e, const CurvePoint& P, Prime p) {
  require_on_curve(e, P);
  const CoordinateChange integ = integralizing_change(e, p);
  const TateResult tate = run_tate(apply_change(e, integ), p);
  const CurvePoint Pm = map_point(integ.then(tate.to_minimal), P);
  return compute_profile(tate, Pm);
}

}  // namespace ecval
