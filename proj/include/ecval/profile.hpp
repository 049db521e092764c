#pragma once

// Reduction data of a single point: singularity, n_P, m_P, the component
// index a_P and the valuations that select a row of the k-value table.

#include <optional>

#include "ecval/curve.hpp"
#include "ecval/tate.hpp"

namespace ecval {

struct ReductionProfile {
  ReductionProfile(TateResult t, CurvePoint minimal_point, CurvePoint normalized)
      : tate(std::move(t)), point(std::move(minimal_point)), normalized_point(std::move(normalized)) {}

  TateResult tate;
  /// P on the minimal model.
  CurvePoint point;
  /// P on the normalized model.
  CurvePoint normalized_point;
  bool singular = false;
  long nP = 1;
  long mP = 1;
  /// Multiplicative reduction with singular P only; least residue in [0, m/2].
  std::optional<long> aP;
  /// Additive c_v = 4 (I_m* or I_0*) with singular P only.
  std::optional<bool> two_P_singular;
  /// Valuations of psi_2^2, psi_3, phi_2 at P on the normalized model.
  Valuation vPsi2Sq, vPsi3, vPhi2;
  /// v(x(P)) on the minimal model.
  Valuation vX;
  /// v(x(P)) on the normalized model.
  Valuation vXNormalized;

  long prime() const { return tate.p; }
  /// m of I_m / I_m*, else 0.
  long kodaira_m() const { return tate.kodaira.m; }
};

/// True iff P reduces to a singular point of the reduction of e modulo p.
/// The model must be p-integral; points with v(x) < 0 reduce to O.
bool is_singular(const WeierstrassModel& e, const CurvePoint& P, Prime p);

/// Search caps for n_P and m_P.
long n_p_search_cap(long p, int cv);
long m_p_search_cap(const TateResult& tate);

/// Profile of P (given on tate.minimal_model). Requires P of infinite order.
ReductionProfile compute_profile(const TateResult& tate, const CurvePoint& P);

/// Full pipeline from an arbitrary rational model: clear p-denominators,
/// run Tate's algorithm, move P to the minimal model, guard against torsion.
ReductionProfile profile_from_input(const WeierstrassModel& e, const CurvePoint& P, Prime p);

/// Change taking the input model to the p-minimal model.
CoordinateChange input_to_minimal(const WeierstrassModel& e, const TateResult& tate, Prime p);

}  // namespace ecval
