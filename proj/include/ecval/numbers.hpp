#pragma once

// Exact integers and rationals, plus the p-adic valuation on Q.

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecval {

using Integer = mpz_class;

/// Malformed or out-of-domain caller input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed (torsion point, singular curve, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Something that theory says cannot happen did happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "n" or "n/d" (optional leading sign, decimal digits only).
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned long exponent);

/// An integer or +infinity.
class Valuation {
 public:
  constexpr Valuation() = default;  // zero
  constexpr Valuation(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Valuation infinity() {
    Valuation v;
    v.v_.reset();
    return v;
  }

  constexpr bool is_infinite() const { return !v_.has_value(); }
  constexpr bool is_finite() const { return v_.has_value(); }
  /// Throws InternalError on infinity.
  long value() const;

  std::string str() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Valuation(*a.v_ + *b.v_);
  }
  friend Valuation operator*(long k, const Valuation& a);

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.v_ <=> *b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

 private:
  std::optional<long> v_ = 0L;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// A checked rational prime.
class Prime {
 public:
  explicit Prime(long p);
  long value() const { return p_; }
  operator long() const { return p_; }  // NOLINT(google-explicit-constructor)

 private:
  long p_;
};

/// v_p(q); infinity for q = 0.
Valuation val(const Rational& q, Prime p);
Valuation val(const Integer& n, Prime p);
/// Checks primality of p first.
Valuation val(const Rational& q, long p);

/// Reduction of a p-integral rational into [0, p).
long mod_p(const Rational& q, Prime p);

/// Least non-negative residue of x modulo m (m > 0).
long lnr(long x, long m);

/// Signed 64-bit conversion; throws InternalError when out of range.
long to_long(const Integer& n);

}  // namespace ecval
