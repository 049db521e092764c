#include "ecval/curve.hpp"

#include <sstream>
#include <vector>

namespace ecval {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

// Partial derivative denominators of the tangent line.
Rational tangent_denominator(const WeierstrassModel& e, const AffinePoint& P) {
  return Rational(2) * P.y + e.a1() * P.x + e.a3();
}

}  // namespace

DerivedQuantities derive(const Rational& a1, const Rational& a2, const Rational& a3,
                         const Rational& a4, const Rational& a6) {
  DerivedQuantities d;
  d.b2 = a1 * a1 + Rational(4) * a2;
  d.b4 = Rational(2) * a4 + a1 * a3;
  d.b6 = a3 * a3 + Rational(4) * a6;
  d.b8 = a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  d.c4 = d.b2 * d.b2 - Rational(24) * d.b4;
  d.c6 = -d.b2 * d.b2 * d.b2 + Rational(36) * d.b2 * d.b4 - Rational(216) * d.b6;
  d.delta = -d.b2 * d.b2 * d.b8 - Rational(8) * d.b4 * d.b4 * d.b4 - Rational(27) * d.b6 * d.b6 +
            Rational(9) * d.b2 * d.b4 * d.b6;
  if (d.delta.is_zero()) throw PreconditionError("singular curve: discriminant is zero");
  d.j = d.c4 * d.c4 * d.c4 / d.delta;
  return d;
}

WeierstrassModel::WeierstrassModel(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
      d_(derive(a_[0], a_[1], a_[2], a_[3], a_[4])) {}

WeierstrassModel WeierstrassModel::parse(std::string_view text) {
  auto parts = split_commas(text);
  if (parts.size() != 5) throw InputError("curve needs five comma-separated a-invariants");
  return WeierstrassModel(Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
                          Rational::parse(parts[3]), Rational::parse(parts[4]));
}

bool WeierstrassModel::is_integral_at(Prime p) const {
  for (const auto& a : a_) {
    if (val(a, p) < Valuation(0)) return false;
  }
  return true;
}

std::string WeierstrassModel::str() const {
  std::ostringstream os;
  os << '[' << a_[0] << ',' << a_[1] << ',' << a_[2] << ',' << a_[3] << ',' << a_[4] << ']';
  return os.str();
}

CurvePoint CurvePoint::parse(std::string_view text) {
  if (text == "O" || text == "o") return infinity();
  auto parts = split_commas(text);
  if (parts.size() != 2) throw InputError("point must be 'x,y' or 'O'");
  return CurvePoint(Rational::parse(parts[0]), Rational::parse(parts[1]));
}

const AffinePoint& CurvePoint::affine() const {
  if (is_infinity()) throw PreconditionError("point at infinity has no affine coordinates");
  return std::get<AffinePoint>(v_);
}

std::string CurvePoint::str() const {
  if (is_infinity()) return "O";
  return "(" + x().str() + "," + y().str() + ")";
}

bool on_curve(const WeierstrassModel& e, const CurvePoint& P) {
  if (P.is_infinity()) return true;
  const auto& [x, y] = P.affine();
  Rational lhs = y * y + e.a1() * x * y + e.a3() * y;
  Rational rhs = ((x + e.a2()) * x + e.a4()) * x + e.a6();
  return lhs == rhs;
}

void require_on_curve(const WeierstrassModel& e, const CurvePoint& P) {
  if (!on_curve(e, P)) throw InputError("point " + P.str() + " is not on curve " + e.str());
}

CoordinateChange CoordinateChange::then(const CoordinateChange& next) const {
  CoordinateChange c;
  c.u = u * next.u;
  c.r = u * u * next.r + r;
  c.s = u * next.s + s;
  c.t = u * u * u * next.t + u * u * s * next.r + t;
  return c;
}

CoordinateChange CoordinateChange::inverse() const {
  if (u.is_zero()) throw InputError("coordinate change with u = 0");
  CoordinateChange c;
  Rational ui = Rational(1) / u;
  c.u = ui;
  c.r = -r * ui * ui;
  c.s = -s * ui;
  c.t = (r * s - t) * ui * ui * ui;
  return c;
}

bool CoordinateChange::is_identity() const { return *this == identity(); }

WeierstrassModel apply_change(const WeierstrassModel& e, const CoordinateChange& c) {
  if (c.u.is_zero()) throw InputError("coordinate change with u = 0");
  const auto& [u, r, s, t] = c;
  const Rational &a1 = e.a1(), &a2 = e.a2(), &a3 = e.a3(), &a4 = e.a4(), &a6 = e.a6();
  Rational u2 = u * u;
  Rational u3 = u2 * u;
  Rational n1 = a1 + Rational(2) * s;
  Rational n2 = a2 - s * a1 + Rational(3) * r - s * s;
  Rational n3 = a3 + r * a1 + Rational(2) * t;
  Rational n4 = a4 - s * a3 + Rational(2) * r * a2 - (t + r * s) * a1 + Rational(3) * r * r - Rational(2) * s * t;
  Rational n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  return WeierstrassModel(n1 / u, n2 / u2, n3 / u3, n4 / (u2 * u2), n6 / (u3 * u3));
}

CurvePoint map_point(const CoordinateChange& c, const CurvePoint& P) {
  if (c.u.is_zero()) throw InputError("coordinate change with u = 0");
  if (P.is_infinity()) return P;
  const auto& [x, y] = P.affine();
  Rational u2 = c.u * c.u;
  Rational xp = (x - c.r) / u2;
  Rational yp = (y - c.s * (x - c.r) - c.t) / (u2 * c.u);
  return CurvePoint(std::move(xp), std::move(yp));
}

CurvePoint neg(const WeierstrassModel& e, const CurvePoint& P) {
  require_on_curve(e, P);
  if (P.is_infinity()) return P;
  const auto& [x, y] = P.affine();
  return CurvePoint(x, -y - e.a1() * x - e.a3());
}

CurvePoint add_unchecked(const WeierstrassModel& e, const CurvePoint& P, const CurvePoint& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const auto& p1 = P.affine();
  const auto& p2 = Q.affine();
  Rational lambda, nu;
  if (p1.x == p2.x) {
    if (p1.y + p2.y + e.a1() * p2.x + e.a3() == Rational(0)) return CurvePoint::infinity();
    Rational den = tangent_denominator(e, p1);
    lambda = (Rational(3) * p1.x * p1.x + Rational(2) * e.a2() * p1.x + e.a4() - e.a1() * p1.y) / den;
    nu = (-p1.x * p1.x * p1.x + e.a4() * p1.x + Rational(2) * e.a6() - e.a3() * p1.y) / den;
  } else {
    Rational dx = p2.x - p1.x;
    lambda = (p2.y - p1.y) / dx;
    nu = (p1.y * p2.x - p2.y * p1.x) / dx;
  }
  Rational x3 = lambda * lambda + e.a1() * lambda - e.a2() - p1.x - p2.x;
  Rational y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
  return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint add(const WeierstrassModel& e, const CurvePoint& P, const CurvePoint& Q) {
  require_on_curve(e, P);
  require_on_curve(e, Q);
  return add_unchecked(e, P, Q);
}

CurvePoint dbl(const WeierstrassModel& e, const CurvePoint& P) { return add(e, P, P); }

CurvePoint mul(const WeierstrassModel& e, long n, const CurvePoint& P) {
  require_on_curve(e, P);
  if (n < 0) return neg(e, mul(e, -n, P));
  CurvePoint acc;
  CurvePoint base = P;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1UL) acc = add_unchecked(e, acc, base);
    k >>= 1;
    if (k) base = add_unchecked(e, base, base);
  }
  return acc;
}

bool passes_torsion_guard(const WeierstrassModel& e, const CurvePoint& P) {
  require_on_curve(e, P);
  CurvePoint Q = P;
  for (int n = 1; n <= kTorsionGuard; ++n) {
    if (Q.is_infinity()) return false;
    Q = add_unchecked(e, Q, P);
  }
  return true;
}

void require_infinite_order(const WeierstrassModel& e, const CurvePoint& P) {
  if (!passes_torsion_guard(e, P)) {
    throw PreconditionError("point " + P.str() + " is torsion (order <= " + std::to_string(kTorsionGuard) + ")");
  }
}

}  // namespace ecval
