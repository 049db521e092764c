#include <gtest/gtest.h>

#include "support.hpp"

using namespace ecval;
using ecval::testing::model;
using ecval::testing::point;
using ecval::testing::profile_of;

namespace {

void expect_agreement(const ReductionProfile& prof, long n_max) {
  const DivPolySequence seq(prof.tate.minimal_model, prof.point, static_cast<int>(n_max));
  const auto direct = direct_values(seq, Prime(prof.prime()));
  for (long n = 1; n <= n_max; ++n) {
    EXPECT_EQ(direct[static_cast<std::size_t>(n - 1)].k, Valuation(k_formula(prof, n))) << "n=" << n;
  }
}

ReductionProfile non_integral_profile() {
  const auto e = model("0,0,0,0,-2");
  return profile_from_input(e, mul(e, 2, point("3,5")), Prime(5));
}

}  // namespace

TEST(KDirect, FirstIndexIsMinOfXValuation) {
  const auto e = model("0,0,0,0,-2");
  EXPECT_EQ(k_direct(e, point("3,5"), Prime(5), 1), Valuation(0));
  EXPECT_EQ(k_direct(e, mul(e, 2, point("3,5")), Prime(5), 1), Valuation(-2));
}

TEST(KDirect, TorsionPointRejected) {
  EXPECT_THROW(k_direct(model("0,0,0,0,1"), point("2,3"), Prime(2), 2), PreconditionError);
}

TEST(KFormula, NonIntegralX) {
  const auto prof = non_integral_profile();
  EXPECT_EQ(k_formula(prof, 5), -50);
  expect_agreement(prof, 30);
}

TEST(KFormula, SplitMultiplicative) {
  const auto prof = profile_of("1,2,2,1,3", "0,1", 2);
  EXPECT_EQ(k_formula(prof, 3), 2 * r_n(2, 5, 3));
  EXPECT_EQ(k_formula(prof, 3), 10);
  const auto t = table_decomposition(prof);
  EXPECT_EQ(t.slope, Rational(Integer(6), Integer(5)));
  EXPECT_EQ(t.epsilon.at(3), Rational(Integer(-4), Integer(5)));
  expect_agreement(prof, 40);
}

TEST(KFormula, TypeIII) {
  const auto prof = profile_of("0,0,0,5,25", "0,5", 5);
  EXPECT_EQ(prof.vPsi3, Valuation(2));
  EXPECT_EQ(k_formula(prof, 3), 4);
  const auto t = table_decomposition(prof);
  EXPECT_EQ(t.slope, Rational(Integer(1), Integer(2)));
  EXPECT_EQ(t.epsilon.at(1), Rational(Integer(-1), Integer(2)));
  EXPECT_EQ(t.epsilon.at(2), Rational(0));
  expect_agreement(prof, 40);
}

TEST(KFormula, TypeIVStar) {
  const auto prof = profile_of("0,25,0,0,625", "0,25", 5);
  EXPECT_EQ(k_formula(prof, 2), 4);
  const auto t = table_decomposition(prof);
  EXPECT_EQ(t.slope, Rational(Integer(4), Integer(3)));
  EXPECT_EQ(t.epsilon.at(2), Rational(Integer(-4), Integer(3)));
  expect_agreement(prof, 40);
}

TEST(KFormula, TypeIIIStar) {
  const auto t = table_decomposition(profile_of("0,0,0,125,15625", "0,125", 5));
  EXPECT_EQ(t.slope, Rational(Integer(3), Integer(2)));
  EXPECT_EQ(t.epsilon.at(1), Rational(Integer(-3), Integer(2)));
  EXPECT_EQ(t.epsilon.at(2), Rational(0));
}

TEST(KFormula, ImStarOddWithSingularDouble) {
  const auto prof = profile_of("0,-5,0,0,875", "-5,25", 5);
  EXPECT_EQ(case_tag(prof), row::kImStarOddCv4Sing);
  EXPECT_EQ(k_formula(prof, 2), 4);
  const auto t = table_decomposition(prof);
  EXPECT_EQ(t.slope, Rational(Integer(5), Integer(4)));
  EXPECT_EQ(t.epsilon.at(2), Rational(-1));
  EXPECT_EQ(t.epsilon.at(1), Rational(Integer(-5), Integer(4)));
  EXPECT_EQ(t.epsilon.at(4), Rational(0));
  expect_agreement(prof, 40);
}

TEST(KFormula, EvenImStarWithFourComponents) {
  const auto prof = profile_of("0,-5,0,125,0", "5,25", 5);
  EXPECT_EQ(case_tag(prof), row::kI2mStarCv4);
  const auto t = table_decomposition(prof);
  EXPECT_TRUE(prof.vPhi2 == Valuation(4) || prof.vPhi2 == Valuation(2 * 1 + 4));
  EXPECT_EQ(t.slope * Rational(4), Rational(prof.vPhi2.value()));
}

TEST(KFormula, IZeroStarIsUntabulated) {
  const auto prof = profile_of("0,0,0,25,625", "0,25", 5);
  EXPECT_TRUE(is_untabulated(prof));
  EXPECT_TRUE(table_decomposition(prof).untabulated);
  expect_agreement(prof, 40);
}

TEST(KFormula, DecompositionNeedsSingularPoint) {
  EXPECT_THROW(table_decomposition(non_integral_profile()), PreconditionError);
}

// A profile with the wrong component index disagrees with the division
// polynomials, so a corrupted profile cannot pass verification.
TEST(KFormula, CorruptedProfileIsDetected) {
  auto prof = profile_of("1,2,2,1,3", "0,1", 2);
  prof.aP = 1;
  const DivPolySequence seq(prof.tate.minimal_model, prof.point, 10);
  const auto direct = direct_values(seq, Prime(2));
  long mismatches = 0;
  for (long n = 1; n <= 10; ++n) mismatches += direct[static_cast<std::size_t>(n - 1)].k != Valuation(k_formula(prof, n));
  EXPECT_GT(mismatches, 0);
}

TEST(PsiPrediction, NonIntegralX) {
  const auto prof = non_integral_profile();
  const auto params = engine_stange_params(prof);
  EXPECT_EQ(params.s, 1);
  EXPECT_EQ(predict_psi_val(prof, params, 3), Valuation(-8));
  EXPECT_EQ(predict_phi_val(prof, 4), Valuation(-32));
}

TEST(PsiPrediction, IntegralNonSingularOffMultiples) {
  const auto prof = profile_of("0,1,0,0,1", "0,1", 5);
  const auto params = engine_stange_params(prof);
  for (long n = 1; n < prof.nP; ++n) EXPECT_EQ(predict_psi_val(prof, params, n), Valuation(0));
}

TEST(PsiPrediction, MultiplicativeOffMultiplesIsRn) {
  const auto prof = profile_of("1,2,2,1,3", "0,1", 2);
  const auto params = engine_stange_params(prof);
  for (long n = 1; n <= 12; ++n) {
    if (n % prof.nP == 0) continue;
    EXPECT_EQ(predict_psi_val(prof, params, n), Valuation(r_n(2, 5, n)));
  }
  EXPECT_EQ(predict_phi_val(prof, 5), Valuation(2 * r_n(2, 5, 5)));
}

TEST(PsiPrediction, AdditiveSingularUnsupported) {
  const auto prof = profile_of("0,0,0,5,25", "0,5", 5);
  EXPECT_THROW(engine_stange_params(prof), PreconditionError);
}
