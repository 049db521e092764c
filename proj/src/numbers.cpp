#include "ecval/numbers.hpp"

#include <cctype>

namespace ecval {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  Integer out;
  std::string tmp(s.front() == '+' ? s.substr(1) : s);
  out.set_str(tmp, 10);
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer n = parse_integer(text.substr(0, slash), text);
  std::string_view dpart = text.substr(slash + 1);
  if (!all_digits(dpart)) throw InputError("malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(dpart, text);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InternalError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

long Valuation::value() const {
  if (!v_) throw InternalError("finite value requested from infinite valuation");
  return *v_;
}

std::string Valuation::str() const { return v_ ? std::to_string(*v_) : std::string("inf"); }

Valuation operator*(long k, const Valuation& a) {
  if (a.is_infinite()) {
    if (k <= 0) throw InternalError("non-positive multiple of infinity");
    return a;
  }
  return Valuation(k * *a.v_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(long p) : p_(p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InputError(std::to_string(p) + " is not prime");
  }
}

Valuation val(const Integer& n, Prime p) {
  if (n == 0) return Valuation::infinity();
  Integer rest;
  Integer pp(p.value());
  return Valuation(static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t())));
}

Valuation val(const Rational& q, Prime p) {
  if (q.is_zero()) return Valuation::infinity();
  Integer rest;
  Integer pp(p.value());
  long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), q.raw().get_num_mpz_t(), pp.get_mpz_t()));
  long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), q.raw().get_den_mpz_t(), pp.get_mpz_t()));
  return Valuation(up - down);
}

Valuation val(const Rational& q, long p) { return val(q, Prime(p)); }

long mod_p(const Rational& q, Prime p) {
  Integer pp(p.value());
  Integer den = q.den();
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()) == 0) {
    throw PreconditionError("cannot reduce " + q.str() + " modulo " + std::to_string(p.value()));
  }
  Integer r = q.num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
  return r.get_si();
}

long lnr(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw InternalError("integer does not fit in 64 bits");
  return n.get_si();
}

}  // namespace ecval
