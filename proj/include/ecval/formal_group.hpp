#pragma once

// Formal group of a Weierstrass model in the local parameter z = -x/y:
// the series w(z), the group law F(z1, z2) and [m]T, all truncated at a
// fixed order. Coefficients live either in Q (exact) or in F_p (for
// reading off unit coefficients of [p]T cheaply).

#include <array>
#include <vector>

#include "ecval/curve.hpp"
#include "ecval/sequences.hpp"

namespace ecval {

/// Element of F_p for small p.
class ModP {
 public:
  ModP(long v, long p) : v_(lnr(v, p)), p_(p) {}
  long value() const { return v_; }
  long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator-() const { return ModP(-v_, p_); }
  friend ModP operator+(const ModP& a, const ModP& b) { return ModP(a.v_ + b.v_, a.p_); }
  friend ModP operator-(const ModP& a, const ModP& b) { return ModP(a.v_ - b.v_, a.p_); }
  friend ModP operator*(const ModP& a, const ModP& b) { return ModP(a.v_ * b.v_ % a.p_, a.p_); }
  friend ModP operator/(const ModP& a, const ModP& b);
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  long v_;
  long p_;
};

/// Power series sum_{i=0}^{N} c_i T^i, exact modulo T^{N+1}.
template <class F>
class TruncatedSeries {
 public:
  TruncatedSeries(int order, F zero) : c_(static_cast<std::size_t>(order) + 1, zero), zero_(zero) {}

  static TruncatedSeries variable(int order, F zero, F one) {
    TruncatedSeries s(order, zero);
    if (order >= 1) s.c_[1] = one;
    return s;
  }
  static TruncatedSeries constant(int order, F zero, F value) {
    TruncatedSeries s(order, zero);
    s.c_[0] = value;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const F& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  F& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<F>& coefficients() const { return c_; }
  const F& zero() const { return zero_; }

  /// Index of the lowest non-zero coefficient, or order() + 1.
  int valuation() const {
    for (int i = 0; i <= order(); ++i) {
      if (!is_zero_coeff(c_[static_cast<std::size_t>(i)])) return i;
    }
    return order() + 1;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries operator-() const {
    TruncatedSeries out(order(), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = a.order();
    TruncatedSeries out(n, a.zero_);
    const int va = a.valuation();
    const int vb = b.valuation();
    for (int i = va; i <= n; ++i) {
      const F& ai = a[i];
      if (is_zero_coeff(ai)) continue;
      for (int k = vb; i + k <= n; ++k) {
        const F& bk = b[k];
        if (is_zero_coeff(bk)) continue;
        out[i + k] = out[i + k] + ai * bk;
      }
    }
    return out;
  }

  TruncatedSeries scaled(const F& k) const {
    TruncatedSeries out(order(), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * k;
    return out;
  }

  /// Multiplicative inverse; the constant term must be invertible.
  TruncatedSeries reciprocal() const {
    const int n = order();
    if (is_zero_coeff(c_[0])) throw InternalError("series reciprocal of a non-unit");
    TruncatedSeries out(n, zero_);
    F inv0 = one_like() / c_[0];
    out[0] = inv0;
    for (int k = 1; k <= n; ++k) {
      F acc = zero_;
      for (int i = 1; i <= k; ++i) acc = acc + (*this)[i] * out[k - i];
      out[k] = -(acc * inv0);
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  static bool is_zero_coeff(const F& f) { return f.is_zero(); }
  F one_like() const;

  std::vector<F> c_;
  F zero_;
};

template <>
inline Rational TruncatedSeries<Rational>::one_like() const { return Rational(1); }
template <>
inline ModP TruncatedSeries<ModP>::one_like() const { return ModP(1, zero_.modulus()); }

using RationalSeries = TruncatedSeries<Rational>;
using ModPSeries = TruncatedSeries<ModP>;

/// Formal group data of one model over F (Q or F_p): w(z) and the group law.
template <class F>
class FormalGroup {
 public:
  FormalGroup(std::array<F, 5> a, int order, F zero, F one);

  int order() const { return w_.order(); }
  /// w(z) = z^3 (1 + a1 z + ...).
  const TruncatedSeries<F>& w() const { return w_; }
  /// F(z1, z2) for series z1, z2 without constant term.
  TruncatedSeries<F> add(const TruncatedSeries<F>& z1, const TruncatedSeries<F>& z2) const;
  /// [m]T for m >= 1.
  TruncatedSeries<F> multiply(long m) const;
  TruncatedSeries<F> variable() const { return TruncatedSeries<F>::variable(order(), zero_, one_); }

 private:
  std::array<F, 5> a_;  // a1, a2, a3, a4, a6
  F zero_, one_;
  TruncatedSeries<F> w_;
  TruncatedSeries<F> w_ext_;  // w to one order higher
};

extern template class FormalGroup<Rational>;
extern template class FormalGroup<ModP>;

/// [m]T mod T^{N+1} with exact rational coefficients.
RationalSeries mult_by_m_series(const WeierstrassModel& e, long m, int order);

/// The exponent b (first unit coefficient of [p]T past T^1, else 1) and
/// h = v(coefficient of T^b) (0 when b = 1). Requires a p-integral model.
struct FormalHeightData {
  long b = 1;
  long h = 0;
  bool fallback = false;  // no unit coefficient up to T^{p^2 + 1}
};
inline constexpr long kFormalHeightPrimeLimit = 31;
FormalHeightData extract_b_h(const WeierstrassModel& e, Prime p);

/// Upper bound on p^{j+1} n_P for the point multiplications behind w.
inline constexpr long kStangeMultiplierBudget = 4096;

/// s, j, w for P on a p-minimal model, given n_P and (b, h).
StangeParams stange_params(const WeierstrassModel& e, const CurvePoint& P, Prime p, long nP,
                           const FormalHeightData& bh);

/// v(x/y) of an affine point; infinity at O.
Valuation v_x_over_y(const CurvePoint& Q, Prime p);

}  // namespace ecval
