#include "ecval/tate.hpp"

#include <functional>
#include <vector>

namespace ecval {

namespace {

// Polynomial over F_p, coefficients low degree first.
long eval_mod(const std::vector<long>& c, long x, long p) {
  long acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = lnr(acc * x + *it, p);
  return acc;
}

std::vector<long> roots_mod(const std::vector<long>& c, long p) {
  std::vector<long> out;
  for (long x = 0; x < p; ++x) {
    if (eval_mod(c, x, p) == 0) out.push_back(x);
  }
  return out;
}

std::vector<long> derivative(const std::vector<long>& c, long p) {
  std::vector<long> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(lnr(static_cast<long>(i) * c[i], p));
  return d;
}

// The unique common root of f and f'; theory guarantees it exists and is rational.
long repeated_root(const std::vector<long>& c, long p) {
  auto d = derivative(c, p);
  for (long x = 0; x < p; ++x) {
    if (eval_mod(c, x, p) == 0 && eval_mod(d, x, p) == 0) return x;
  }
  throw InternalError("expected a repeated root modulo " + std::to_string(p));
}

Rational p_power(long p, int k) { return pow(Rational(p), static_cast<unsigned long>(k)); }

class TateRunner {
 public:
  TateRunner(const WeierstrassModel& e, Prime p) : p_(p), model_(e), start_(e) {}

  TateResult run() {
    while (true) {
      if (auto r = pass()) return *std::move(r);
    }
  }

 private:
  long residue(const Rational& q) const { return mod_p(q, p_); }
  Valuation v(const Rational& q) const { return val(q, p_); }
  bool divisible(const Rational& q, long k) const { return v(q) >= Valuation(k); }

  void translate(const Rational& r, const Rational& s, const Rational& t) {
    auto c = CoordinateChange::translation(r, s, t);
    model_ = apply_change(model_, c);
    pass_change_ = pass_change_.then(c);
  }

  void require(bool ok, const char* what) const {
    if (!ok) throw InternalError(std::string("Tate's algorithm invariant failed: ") + what);
  }

  TateResult finish(KodairaType type, int cv, ReductionKind kind, std::optional<bool> split = std::nullopt) {
    TateResult r{start_, model_, to_start_, pass_change_, type, cv, {}, {}, {}, kind, split, p_.value()};
    const auto& d = start_.derived();
    r.vDelta = v(d.delta);
    r.vC4 = v(d.c4);
    r.vJ = d.c4.is_zero() ? Valuation::infinity() : Valuation(3 * r.vC4.value() - r.vDelta.value());
    return r;
  }

  // Move a singular point of the reduction to (0, 0).
  void move_singular_point() {
    const long p = p_.value();
    long a1 = residue(model_.a1()), a2 = residue(model_.a2()), a3 = residue(model_.a3());
    long a4 = residue(model_.a4()), a6 = residue(model_.a6());
    auto F = [&](long x, long y) { return lnr(y * y + a1 * x * y + a3 * y - ((x + a2) * x + a4) * x - a6, p); };
    auto Fx = [&](long x, long y) { return lnr(a1 * y - 3 * x * x - 2 * a2 * x - a4, p); };
    auto Fy = [&](long x, long y) { return lnr(2 * y + a1 * x + a3, p); };
    long inv2 = (p + 1) / 2;
    for (long x = 0; x < p; ++x) {
      std::vector<long> ys;
      if (p == 2) {
        ys = {0, 1};
      } else {
        ys = {lnr(-(a1 * x + a3) * inv2, p)};
      }
      for (long y : ys) {
        if (F(x, y) == 0 && Fx(x, y) == 0 && Fy(x, y) == 0) {
          translate(Rational(x), Rational(0), Rational(y));
          return;
        }
      }
    }
    throw InternalError("no singular point on a reduction with p | discriminant");
  }

  bool quadratic_splits(long a, long b, long c) const {
    return !roots_mod({c, b, a}, p_.value()).empty();
  }

  std::optional<TateResult> pass() {
    const long p = p_.value();
    const auto& d0 = model_.derived();
    if (v(d0.delta) == Valuation(0)) return finish({KodairaFamily::I0, 0}, 1, ReductionKind::Good);

    move_singular_point();
    require(divisible(model_.a3(), 1) && divisible(model_.a4(), 1) && divisible(model_.a6(), 1),
            "p | a3, a4, a6 after moving the singular point");

    const auto& d = model_.derived();
    if (v(d.b2) == Valuation(0)) {
      long m = v(d.delta).value();
      bool split = quadratic_splits(1, residue(model_.a1()), lnr(-residue(model_.a2()), p));
      int cv = split ? static_cast<int>(m) : (m % 2 == 1 ? 1 : 2);
      return finish({KodairaFamily::In, static_cast<int>(m)}, cv, ReductionKind::Multiplicative, split);
    }
    if (!divisible(model_.a6(), 2)) return finish({KodairaFamily::II, 0}, 1, ReductionKind::Additive);
    if (!divisible(d.b8, 3)) return finish({KodairaFamily::III, 0}, 2, ReductionKind::Additive);
    if (!divisible(d.b6, 3)) {
      bool roots = quadratic_splits(1, residue(model_.a3() / p_power(p, 1)), lnr(-residue(model_.a6() / p_power(p, 2)), p));
      return finish({KodairaFamily::IV, 0}, roots ? 3 : 1, ReductionKind::Additive);
    }

    // Arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
    if (p == 2) {
      translate(Rational(0), Rational(residue(model_.a2())), Rational(2 * residue(model_.a6() / Rational(4))));
    } else {
      long inv2 = (p + 1) / 2;
      Rational s(lnr(-residue(model_.a1()) * inv2, p));
      // t must kill a3 modulo p^2, so lift -a3/2 there.
      Integer p2 = Integer(p) * p;
      Integer t = (-model_.a3().num()) * Integer(inv2);
      Integer den_inv;
      Integer den = model_.a3().den();
      mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p2.get_mpz_t());
      t *= den_inv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p2.get_mpz_t());
      translate(Rational(0), s, Rational(t));
    }
    require(divisible(model_.a1(), 1) && divisible(model_.a2(), 1) && divisible(model_.a3(), 2) &&
                divisible(model_.a4(), 2) && divisible(model_.a6(), 3),
            "step 6 divisibility");

    long b = residue(model_.a2() / p_power(p, 1));
    long c = residue(model_.a4() / p_power(p, 2));
    long dd = residue(model_.a6() / p_power(p, 3));
    std::vector<long> cubic{dd, c, b, 1};
    long w = lnr(b * b % p * c % p * c - 4 * c * c % p * c - 4 * b * b % p * b % p * dd - 27 * dd * dd +
                     18 * b * c % p * dd,
                 p);
    long x = lnr(b * b - 3 * c, p);

    if (w != 0) {
      int cv = 1 + static_cast<int>(roots_mod(cubic, p).size());
      return finish({KodairaFamily::I0Star, 0}, cv, ReductionKind::Additive);
    }

    if (x != 0) {
      long alpha = repeated_root(cubic, p);
      translate(Rational(p * alpha), Rational(0), Rational(0));
      require(v(model_.a2()) == Valuation(1) && divisible(model_.a4(), 3) && divisible(model_.a6(), 4),
              "I_m* entry valuations");
      int m = 1;
      int ex = 2, ey = 2;
      while (true) {
        long xa3 = residue(model_.a3() / p_power(p, ey));
        long xa6 = residue(model_.a6() / p_power(p, ex + ey));
        if (lnr(xa3 * xa3 + 4 * xa6, p) != 0) {
          int cv = quadratic_splits(1, xa3, lnr(-xa6, p)) ? 4 : 2;
          return finish({KodairaFamily::InStar, m}, cv, ReductionKind::Additive);
        }
        long y0 = repeated_root({lnr(-xa6, p), xa3, 1}, p);
        translate(Rational(0), Rational(0), p_power(p, ey) * Rational(y0));
        ++ey;
        ++m;
        long xa2 = residue(model_.a2() / p_power(p, 1));
        long xa4 = residue(model_.a4() / p_power(p, ex + 1));
        xa6 = residue(model_.a6() / p_power(p, ex + ey));
        if (lnr(xa4 * xa4 - 4 * xa2 * xa6, p) != 0) {
          int cv = quadratic_splits(xa2, xa4, xa6) ? 4 : 2;
          return finish({KodairaFamily::InStar, m}, cv, ReductionKind::Additive);
        }
        long x0 = repeated_root({xa6, xa4, xa2}, p);
        translate(p_power(p, ex) * Rational(x0), Rational(0), Rational(0));
        ++ex;
        ++m;
      }
    }

    long alpha = repeated_root(cubic, p);
    translate(Rational(p * alpha), Rational(0), Rational(0));
    require(divisible(model_.a2(), 2) && divisible(model_.a4(), 3) && divisible(model_.a6(), 4),
            "triple root translation");
    long ya3 = residue(model_.a3() / p_power(p, 2));
    long ya6 = residue(model_.a6() / p_power(p, 4));
    if (lnr(ya3 * ya3 + 4 * ya6, p) != 0) {
      int cv = quadratic_splits(1, ya3, lnr(-ya6, p)) ? 3 : 1;
      return finish({KodairaFamily::IVStar, 0}, cv, ReductionKind::Additive);
    }
    long y0 = repeated_root({lnr(-ya6, p), ya3, 1}, p);
    translate(Rational(0), Rational(0), p_power(p, 2) * Rational(y0));
    require(divisible(model_.a3(), 3) && divisible(model_.a6(), 5), "step 8 translation");
    if (!divisible(model_.a4(), 4)) return finish({KodairaFamily::IIIStar, 0}, 2, ReductionKind::Additive);
    if (!divisible(model_.a6(), 6)) return finish({KodairaFamily::IIStar, 0}, 1, ReductionKind::Additive);

    // Not minimal: scale by u = p and start over.
    CoordinateChange scale{Rational(p), Rational(0), Rational(0), Rational(0)};
    model_ = apply_change(model_, scale);
    to_start_ = to_start_.then(pass_change_).then(scale);
    pass_change_ = CoordinateChange::identity();
    start_ = model_;
    return std::nullopt;
  }

  Prime p_;
  WeierstrassModel model_;
  WeierstrassModel start_;
  CoordinateChange to_start_;
  CoordinateChange pass_change_;
};

}  // namespace

std::string KodairaType::str() const {
  switch (family) {
    case KodairaFamily::I0: return "I0";
    case KodairaFamily::In: return "I" + std::to_string(m);
    case KodairaFamily::II: return "II";
    case KodairaFamily::III: return "III";
    case KodairaFamily::IV: return "IV";
    case KodairaFamily::I0Star: return "I0*";
    case KodairaFamily::InStar: return "I" + std::to_string(m) + "*";
    case KodairaFamily::IVStar: return "IV*";
    case KodairaFamily::IIIStar: return "III*";
    case KodairaFamily::IIStar: return "II*";
  }
  return "?";
}

KodairaType KodairaType::parse(std::string_view text) {
  if (text == "I0") return {KodairaFamily::I0, 0};
  if (text == "II") return {KodairaFamily::II, 0};
  if (text == "III") return {KodairaFamily::III, 0};
  if (text == "IV") return {KodairaFamily::IV, 0};
  if (text == "I0*") return {KodairaFamily::I0Star, 0};
  if (text == "IV*") return {KodairaFamily::IVStar, 0};
  if (text == "III*") return {KodairaFamily::IIIStar, 0};
  if (text == "II*") return {KodairaFamily::IIStar, 0};
  if (text.size() >= 2 && text.front() == 'I') {
    bool star = text.back() == '*';
    std::string_view digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos) {
      int m = std::stoi(std::string(digits));
      if (m >= 1) return {star ? KodairaFamily::InStar : KodairaFamily::In, m};
    }
  }
  throw InputError("unknown Kodaira symbol '" + std::string(text) + "'");
}

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Good: return "good";
    case ReductionKind::Multiplicative: return "multiplicative";
    case ReductionKind::Additive: return "additive";
  }
  return "?";
}

TateResult run_tate(const WeierstrassModel& e, Prime p) {
  if (!e.is_integral_at(p)) {
    throw InputError("Tate's algorithm needs " + std::to_string(p.value()) + "-integral a-invariants");
  }
  if (p.value() > kTatePrimeLimit) {
    throw ResourceError("Tate's algorithm searches F_p exhaustively; p is above the supported limit");
  }
  return TateRunner(e, p).run();
}

CoordinateChange integralizing_change(const WeierstrassModel& e, Prime p) {
  static constexpr int weights[5] = {1, 2, 3, 4, 6};
  long k = 0;
  for (int i = 0; i < 5; ++i) {
    Valuation vi = val(e.coefficients()[static_cast<std::size_t>(i)], p);
    if (vi.is_infinite() || vi.value() >= 0) continue;
    long need = (-vi.value() + weights[i] - 1) / weights[i];
    k = std::max(k, need);
  }
  if (k == 0) return CoordinateChange::identity();
  CoordinateChange c;
  c.u = Rational(1) / pow(Rational(p.value()), static_cast<unsigned long>(k));
  return c;
}

}  // namespace ecval
