#include <gtest/gtest.h>

#include "support.hpp"

using namespace ecval;

TEST(Rn, HandValues) {
  EXPECT_EQ(r_n(1, 3, 2), 1);
  EXPECT_EQ(r_n(2, 5, 3), 5);
  for (long ell = 1; ell <= 9; ++ell) {
    for (long a = 0; a < ell; ++a) EXPECT_EQ(r_n(a, ell, 1), 0);
    for (long n = 0; n <= 20; ++n) EXPECT_EQ(r_n(0, ell, n), 0);
  }
}

TEST(Rn, Errors) {
  EXPECT_THROW(r_n(1, 0, 3), InputError);
  EXPECT_THROW(r_n(1, 3, -1), InputError);
}

TEST(Rn, NegativeResidueInputs) { EXPECT_EQ(r_n(-3, 5, 3), r_n(2, 5, 3)); }

TEST(Sn, HandValues) {
  StangeParams b1;
  b1.b = 1;
  b1.s = 2;
  EXPECT_EQ(s_n(b1, Prime(5), 7), Valuation(2));
  EXPECT_EQ(s_n(b1, Prime(5), 25), Valuation(4));

  StangeParams w;
  w.b = 2;
  w.h = 0;
  w.s = 1;
  w.j = stange_j(2, 1, 0, 1);
  w.w = Valuation(3);
  EXPECT_EQ(w.j, 0);
  EXPECT_TRUE(stange_w_applies(2, 1, 0, 1, 0));
  EXPECT_EQ(s_n(w, Prime(2), 2), Valuation(5));
  w.w = Valuation::infinity();
  EXPECT_TRUE(s_n(w, Prime(2), 2).is_infinite());
}

TEST(Sn, JAndWConditions) {
  EXPECT_EQ(stange_j(1, 1, 0, 4), 0);
  EXPECT_EQ(stange_j(3, 1, 0, 1), 0);
  EXPECT_FALSE(stange_w_applies(3, 1, 0, 1, 0));
  EXPECT_FALSE(stange_w_applies(1, 1, 0, 1, 0));
  EXPECT_EQ(stange_j(2, 5, 0, 1), 3);
}

TEST(Sn, UnitIndexGivesS) {
  for (long b : {1L, 3L, 9L}) {
    StangeParams sp;
    sp.b = b;
    sp.s = 3;
    sp.j = stange_j(b, 1, 0, 3);
    for (long m : {1L, 2L, 4L, 5L, 7L, 11L}) EXPECT_EQ(s_n(sp, Prime(3), m), Valuation(3)) << b << " " << m;
  }
}
