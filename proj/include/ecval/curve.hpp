#pragma once

// Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q,
// coordinate changes, and the chord-tangent group law.

#include <array>
#include <string>
#include <variant>

#include "ecval/numbers.hpp"

namespace ecval {

struct DerivedQuantities {
  Rational b2, b4, b6, b8;
  Rational c4, c6;
  Rational delta;
  Rational j;
};

/// Computes b2..j. Throws PreconditionError when the discriminant vanishes.
DerivedQuantities derive(const Rational& a1, const Rational& a2, const Rational& a3,
                         const Rational& a4, const Rational& a6);

/// A non-singular Weierstrass model.
class WeierstrassModel {
 public:
  /// Throws PreconditionError if the discriminant is zero.
  WeierstrassModel(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);

  /// "a1,a2,a3,a4,a6" with rational entries.
  static WeierstrassModel parse(std::string_view text);

  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  const std::array<Rational, 5>& coefficients() const { return a_; }
  const DerivedQuantities& derived() const { return d_; }

  bool is_integral_at(Prime p) const;
  std::string str() const;

  friend bool operator==(const WeierstrassModel& a, const WeierstrassModel& b) { return a.a_ == b.a_; }

 private:
  std::array<Rational, 5> a_;
  DerivedQuantities d_;
};

inline DerivedQuantities derive(const WeierstrassModel& m) { return m.derived(); }

struct AffinePoint {
  Rational x, y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};
struct PointAtInfinity {
  friend bool operator==(const PointAtInfinity&, const PointAtInfinity&) = default;
};

/// Either the identity O or an affine point.
class CurvePoint {
 public:
  CurvePoint() : v_(PointAtInfinity{}) {}
  CurvePoint(Rational x, Rational y) : v_(AffinePoint{std::move(x), std::move(y)}) {}
  static CurvePoint infinity() { return CurvePoint(); }
  /// "x,y" or "O".
  static CurvePoint parse(std::string_view text);

  bool is_infinity() const { return std::holds_alternative<PointAtInfinity>(v_); }
  /// Throws PreconditionError at infinity.
  const AffinePoint& affine() const;
  const Rational& x() const { return affine().x; }
  const Rational& y() const { return affine().y; }
  std::string str() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  std::variant<PointAtInfinity, AffinePoint> v_;
};

bool on_curve(const WeierstrassModel& e, const CurvePoint& P);
/// Throws InputError when P is not on e.
void require_on_curve(const WeierstrassModel& e, const CurvePoint& P);

/// x = u^2 x' + r,  y = u^3 y' + u^2 s x' + t.
struct CoordinateChange {
  Rational u{1}, r{0}, s{0}, t{0};

  static CoordinateChange identity() { return {}; }
  static CoordinateChange translation(Rational r, Rational s, Rational t) {
    return {Rational(1), std::move(r), std::move(s), std::move(t)};
  }
  /// Apply *this first, then `next` (on the model produced by *this).
  CoordinateChange then(const CoordinateChange& next) const;
  CoordinateChange inverse() const;
  bool is_identity() const;

  friend bool operator==(const CoordinateChange&, const CoordinateChange&) = default;
};

WeierstrassModel apply_change(const WeierstrassModel& e, const CoordinateChange& c);
CurvePoint map_point(const CoordinateChange& c, const CurvePoint& P);

CurvePoint neg(const WeierstrassModel& e, const CurvePoint& P);
CurvePoint add(const WeierstrassModel& e, const CurvePoint& P, const CurvePoint& Q);
CurvePoint dbl(const WeierstrassModel& e, const CurvePoint& P);
/// Double-and-add; mul(e, 0, P) = O, mul(e, -n, P) = -mul(e, n, P).
CurvePoint mul(const WeierstrassModel& e, long n, const CurvePoint& P);

/// Group law without the on-curve check, for inner loops over known points.
CurvePoint add_unchecked(const WeierstrassModel& e, const CurvePoint& P, const CurvePoint& Q);

/// Largest multiple checked by the infinite-order guard. Rational torsion
/// has order at most 12.
inline constexpr int kTorsionGuard = 16;

/// True when [n]P != O for n = 1..kTorsionGuard.
bool passes_torsion_guard(const WeierstrassModel& e, const CurvePoint& P);
/// Throws PreconditionError when the guard fails.
void require_infinite_order(const WeierstrassModel& e, const CurvePoint& P);

}  // namespace ecval
