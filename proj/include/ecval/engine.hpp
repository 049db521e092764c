#pragma once

// k_{v,n}(P) = min(v(phi_n(P)), v(psi_n(P)^2)) computed two ways: from the
// closed-form case analysis and directly from division polynomial values.
// Also the slope + epsilon(n) decomposition by Kodaira row, and predicted
// valuations of psi_n and phi_n.

#include <optional>
#include <string>
#include <vector>

#include "ecval/divpoly.hpp"
#include "ecval/formal_group.hpp"
#include "ecval/profile.hpp"

namespace ecval {

namespace row {
inline constexpr const char* kIIIStar = "III*";
inline constexpr const char* kIVStar = "IV*";
inline constexpr const char* kIII = "III";
inline constexpr const char* kIV = "IV";
inline constexpr const char* kImStarCv2 = "Im* cv=2";
inline constexpr const char* kImStarOddCv4Ns = "Im* m odd cv=4 [2]P non-singular";
inline constexpr const char* kImStarOddCv4Sing = "Im* m odd cv=4 [2]P singular";
inline constexpr const char* kI2mStarCv4 = "I2m* cv=4";
inline constexpr const char* kImSplit = "Im split";
inline constexpr const char* kImNonSplit = "Im non-split";
inline constexpr const char* kI0StarCv2 = "I0* cv=2";
inline constexpr const char* kI0StarCv4 = "I0* cv=4";
inline constexpr const char* kNonSingNegX = "non-singular v(x)<0";
inline constexpr const char* kNonSingNonNegX = "non-singular v(x)>=0";
}  // namespace row

/// Row label of the profile (one of the row:: constants).
std::string case_tag(const ReductionProfile& prof);
/// I_0* rows have no entry in the k-value table; they follow the c_v = 2 rule.
bool is_untabulated(const ReductionProfile& prof);

/// Valuations read off the division polynomial table at index n.
struct DirectValues {
  long n = 0;
  Valuation vPsi;
  Valuation vPsiSq;
  Valuation vPhi;
  Valuation k;
};

/// Direct values for n = 1..N from one division polynomial table.
std::vector<DirectValues> direct_values(const DivPolySequence& seq, Prime p);
/// min(v(phi_n(P)), v(psi_n(P)^2)); P must pass the infinite-order guard.
Valuation k_direct(const WeierstrassModel& e, const CurvePoint& P, Prime p, long n);

/// k_{v,n}(P) from the case formulas.
long k_formula(const ReductionProfile& prof, long n);

/// epsilon(n) as a function of n modulo its own modulus.
struct EpsilonRule {
  long modulus = 1;
  std::vector<Rational> by_residue;
  Rational at(long n) const { return by_residue[static_cast<std::size_t>(lnr(n, modulus))]; }
};

struct TheoremPrediction {
  std::string case_tag;
  /// Coefficient of n^2 (the normalized local height).
  Rational slope;
  EpsilonRule epsilon;
  /// m_P as printed for the row.
  long table_mP = 1;
  bool untabulated = false;
  Rational value(long n) const { return slope * Rational(n * n) + epsilon.at(n); }
};

/// Slope and epsilon for a singular point, from the row literals. Checks
/// slope n^2 + epsilon(n) = k_formula(n) for 1 <= n <= 4 m_P (InternalError
/// on failure). Non-singular P is a PreconditionError.
TheoremPrediction table_decomposition(const ReductionProfile& prof);

/// Predicted v(psi_n(P)) for non-singular P or multiplicative singular P.
/// For the latter, params must carry b = p and h = 0.
Valuation predict_psi_val(const ReductionProfile& prof, const StangeParams& params, long n);

/// Predicted v(phi_n(P)) where the closed forms apply, else nullopt.
/// vx_n is v(x([n]P)) on the minimal model, when known.
std::optional<Valuation> predict_phi_val(const ReductionProfile& prof, long n,
                                         std::optional<Valuation> vx_n = std::nullopt);

/// Formal-group parameters matching predict_psi_val's case.
StangeParams engine_stange_params(const ReductionProfile& prof);

}  // namespace ecval
