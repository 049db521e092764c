#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace ecval;
using ecval::testing::q;

TEST(Valuation, ZeroIsInfinite) { EXPECT_TRUE(val(Rational(0), Prime(7)).is_infinite()); }

TEST(Valuation, UnitIsZero) { EXPECT_EQ(val(Rational(1), Prime(5)), Valuation(0)); }

TEST(Valuation, HandFactorizations) {
  EXPECT_EQ(val(Rational(48), Prime(2)), Valuation(4));
  EXPECT_EQ(val(q("5/27"), Prime(3)), Valuation(-3));
  EXPECT_EQ(val(q("-1000/3"), Prime(5)), Valuation(3));
}

TEST(Valuation, NonPrimeRejected) {
  EXPECT_THROW(Prime(1), InputError);
  EXPECT_THROW(Prime(15), InputError);
  EXPECT_THROW(val(Rational(3), 9L), InputError);
}

TEST(Valuation, InfinityArithmetic) {
  const Valuation inf = Valuation::infinity();
  EXPECT_TRUE((inf + Valuation(3)).is_infinite());
  EXPECT_LT(Valuation(1000000), inf);
  EXPECT_EQ(min(inf, Valuation(-2)), Valuation(-2));
  EXPECT_THROW(inf.value(), InternalError);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(q("-6/4").str(), "-3/2");
  EXPECT_THROW(q("6/-4"), InputError);
  EXPECT_EQ(q(" 12 ").str(), "12");
  EXPECT_EQ(q("123456789012345678901234567890/10").str(), "12345678901234567890123456789");
  EXPECT_THROW(q("1/0"), InputError);
  EXPECT_THROW(q("abc"), InputError);
  EXPECT_THROW(q(""), InputError);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), InternalError); }

TEST(Residues, LeastNonNegative) {
  EXPECT_EQ(lnr(-1, 5), 4);
  EXPECT_EQ(lnr(10, 5), 0);
  EXPECT_EQ(mod_p(q("1/2"), Prime(5)), 3);
}

TEST(Primality, SmallAndLarge) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
}

// v(ab) = v(a) + v(b) and v(a + b) >= min(v(a), v(b)), with equality when
// the valuations differ.
TEST(ValuationProperties, RandomRationals) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (long p : {2L, 3L, 5L, 7L, 101L}) {
    const Prime pr(p);
    for (int i = 0; i < 400; ++i) {
      const Rational a(Integer(num(rng)), Integer(den(rng)));
      const Rational b(Integer(num(rng)), Integer(den(rng)));
      EXPECT_EQ(val(a * b, pr), val(a, pr) + val(b, pr));
      const Valuation s = val(a + b, pr);
      EXPECT_GE(s, min(val(a, pr), val(b, pr)));
      if (val(a, pr) != val(b, pr)) {
        EXPECT_EQ(s, min(val(a, pr), val(b, pr)));
      }
    }
  }
}
