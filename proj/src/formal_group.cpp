#include "ecval/formal_group.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace ecval {

ModP operator/(const ModP& a, const ModP& b) {
  if (b.is_zero()) throw InternalError("division by zero in F_p");
  // Extended Euclid on longs.
  long r0 = a.p_, r1 = b.v_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return ModP(a.v_ * lnr(t0, a.p_) % a.p_, a.p_);
}

namespace {

template <class F>
TruncatedSeries<F> compose(const TruncatedSeries<F>& outer, const TruncatedSeries<F>& inner) {
  // Horner evaluation; inner has no constant term so truncation is exact.
  const int n = outer.order();
  TruncatedSeries<F> acc = TruncatedSeries<F>::constant(n, outer.zero(), outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * inner;
    acc[0] = acc[0] + outer[k];
  }
  return acc;
}

}  // namespace

namespace {

template <class F>
TruncatedSeries<F> truncate(const TruncatedSeries<F>& s, int order) {
  TruncatedSeries<F> out(order, s.zero());
  for (int i = 0; i <= std::min(order, s.order()); ++i) out[i] = s[i];
  return out;
}

}  // namespace

template <class F>
FormalGroup<F>::FormalGroup(std::array<F, 5> a, int order, F zero, F one)
    : a_(std::move(a)), zero_(zero), one_(one), w_(order, zero), w_ext_(order + 1, zero) {
  if (order < 1) throw InputError("formal group order must be at least 1");
  const auto& [a1, a2, a3, a4, a6] = a_;
  // w_ext_ runs to T^{order + 1}; the slope in add() reads that coefficient.
  const auto z = TruncatedSeries<F>::variable(order + 1, zero_, one_);
  const auto z2 = z * z;
  const auto z3 = z2 * z;
  // Each pass fixes at least one more coefficient of w.
  for (int pass = 0; pass <= order + 1; ++pass) {
    const auto ww = w_ext_ * w_ext_;
    auto next = z3 + (z * w_ext_).scaled(a1) + (z2 * w_ext_).scaled(a2) + ww.scaled(a3) +
                (z * ww).scaled(a4) + (ww * w_ext_).scaled(a6);
    if (next == w_ext_) break;
    w_ext_ = std::move(next);
  }
  w_ = truncate(w_ext_, order);
}

template <class F>
TruncatedSeries<F> FormalGroup<F>::add(const TruncatedSeries<F>& z1,
                                        const TruncatedSeries<F>& z2) const {
  const int n = order();
  const auto& [a1, a2, a3, a4, a6] = a_;
  const F two = one_ + one_;
  const F three = two + one_;

  // lambda = (w(z2) - w(z1)) / (z2 - z1) = sum_k A_k h_{k-1}(z1, z2), with
  // h_0 = 1 and h_k = z2 h_{k-1} + z1^k.
  auto h = TruncatedSeries<F>::constant(n, zero_, one_);
  auto z1pow = h;
  auto lambda = TruncatedSeries<F>(n, zero_);
  // h_k is homogeneous of degree k in (z1, z2), so it vanishes mod T^{n+1}
  // once k * min(ord z1, ord z2) > n. Its computed valuation cannot be used
  // instead: over F_p, h_k(T, T) = (k + 1) T^k can vanish early.
  const int low = std::max(1, std::min(z1.valuation(), z2.valuation()));
  for (int k = 1; k <= n && k * low <= n; ++k) {
    z1pow = z1pow * z1;
    h = z2 * h + z1pow;
    if (!w_ext_[k + 1].is_zero()) lambda += h.scaled(w_ext_[k + 1]);
  }
  const auto nu = compose(w_, z1) - lambda * z1;
  const auto l2 = lambda * lambda;
  const auto l3 = l2 * lambda;
  // Substituting w = lambda z + nu into the curve gives a cubic in z whose
  // roots are z1, z2 and z3.
  auto numer = lambda.scaled(a1) + l2.scaled(a3) + nu.scaled(a2) + (lambda * nu).scaled(two * a4) +
               (l2 * nu).scaled(three * a6);
  auto denom = TruncatedSeries<F>::constant(n, zero_, one_) + lambda.scaled(a2) + l2.scaled(a4) +
               l3.scaled(a6);
  const auto z3 = -(numer * denom.reciprocal()) - z1 - z2;
  const auto w3 = lambda * z3 + nu;
  auto inv_denom = z3.scaled(a1) + w3.scaled(a3);
  inv_denom[0] = inv_denom[0] - one_;
  return z3 * inv_denom.reciprocal();
}

template <class F>
TruncatedSeries<F> FormalGroup<F>::multiply(long m) const {
  if (m < 1) throw InputError("formal multiplication needs m >= 1");
  const auto t = variable();
  std::optional<TruncatedSeries<F>> acc;
  auto base = t;
  for (long k = m; k > 0; k >>= 1) {
    if (k & 1) acc = acc ? add(*acc, base) : base;
    if (k > 1) base = add(base, base);
  }
  return *acc;
}

template class FormalGroup<Rational>;
template class FormalGroup<ModP>;

RationalSeries mult_by_m_series(const WeierstrassModel& e, long m, int order) {
  const auto c = e.coefficients();
  FormalGroup<Rational> g({c[0], c[1], c[2], c[3], c[4]}, order, Rational(0), Rational(1));
  return g.multiply(m);
}

namespace {

std::optional<long> first_unit_index(const WeierstrassModel& e, Prime p, int order) {
  const long pv = p.value();
  const auto c = e.coefficients();
  std::array<ModP, 5> a{ModP(mod_p(c[0], p), pv), ModP(mod_p(c[1], p), pv),
                        ModP(mod_p(c[2], p), pv), ModP(mod_p(c[3], p), pv),
                        ModP(mod_p(c[4], p), pv)};
  FormalGroup<ModP> g(a, order, ModP(0, pv), ModP(1, pv));
  const auto series = g.multiply(pv);
  for (int i = 2; i <= order; ++i) {
    if (!series[i].is_zero()) return i;
  }
  return std::nullopt;
}

}  // namespace

FormalHeightData extract_b_h(const WeierstrassModel& e, Prime p) {
  if (!e.is_integral_at(p)) throw InputError("formal height needs a p-integral model");
  const long pv = p.value();
  if (pv > kFormalHeightPrimeLimit) throw ResourceError("formal height scan is limited to small primes");
  FormalHeightData out;
  for (long order : {pv + 1, pv * pv + 1}) {
    if (auto b = first_unit_index(e, p, static_cast<int>(order))) {
      out.b = *b;
      return out;
    }
  }
  out.fallback = true;
  return out;
}

Valuation v_x_over_y(const CurvePoint& Q, Prime p) {
  if (Q.is_infinity()) return Valuation::infinity();
  const auto& pt = Q.affine();
  if (pt.y.is_zero()) throw PreconditionError("x/y is undefined at a point with y = 0");
  if (pt.x.is_zero()) return Valuation::infinity();
  return Valuation(val(pt.x, p).value() - val(pt.y, p).value());
}

StangeParams stange_params(const WeierstrassModel& e, const CurvePoint& P, Prime p, long nP,
                           const FormalHeightData& bh) {
  StangeParams out;
  out.b = bh.b;
  out.h = bh.h;
  out.e = 1;
  out.b_fallback = bh.fallback;
  const CurvePoint Q = mul(e, nP, P);
  const Valuation sv = v_x_over_y(Q, p);
  if (sv.is_infinite() || sv.value() < 1) {
    throw InternalError("[n_P]P is not in the formal group");
  }
  out.s = sv.value();
  out.j = stange_j(out.b, out.e, out.h, out.s);
  if (!stange_w_applies(out.b, out.e, out.h, out.s, out.j)) return out;

  long pj = 1;
  for (long i = 0; i < out.j; ++i) pj *= p.value();
  if (pj * p.value() > kStangeMultiplierBudget / nP) {
    throw ResourceError("w needs [p^(j+1) n_P]P beyond the multiplier budget");
  }
  const Valuation lo = v_x_over_y(mul(e, pj * nP, P), p);
  const Valuation hi = v_x_over_y(mul(e, pj * p.value() * nP, P), p);
  if (hi.is_infinite()) {
    out.w = Valuation::infinity();
    return out;
  }
  out.w = Valuation(hi.value() - out.b * lo.value() - out.h);
  return out;
}

}  // namespace ecval
