#pragma once

// Tate's algorithm at a prime p over Q, run on exact rationals with v_p.

#include <optional>
#include <string>

#include "ecval/curve.hpp"

namespace ecval {

enum class KodairaFamily { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

struct KodairaType {
  KodairaFamily family = KodairaFamily::I0;
  int m = 0;  // subscript for In / InStar

  /// "I0", "I7", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*".
  std::string str() const;
  static KodairaType parse(std::string_view text);

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

enum class ReductionKind { Good, Multiplicative, Additive };

std::string to_string(ReductionKind k);

struct TateResult {
  WeierstrassModel minimal_model;
  /// Model Tate's algorithm holds when it identifies the type.
  WeierstrassModel normalized_model;
  /// Input model -> minimal model (may scale by powers of p).
  CoordinateChange to_minimal;
  /// Minimal model -> normalized model; always a translation (u = 1).
  CoordinateChange to_normalized;
  KodairaType kodaira;
  int cv = 1;
  Valuation vDelta, vC4, vJ;
  ReductionKind reduction = ReductionKind::Good;
  /// Set only for multiplicative reduction.
  std::optional<bool> split;
  long p = 0;
};

/// Residue-field searches are exhaustive, so p is capped.
inline constexpr long kTatePrimeLimit = 1000000;

/// Requires p-integral a-invariants; throws InputError otherwise.
TateResult run_tate(const WeierstrassModel& e, Prime p);

/// Scaling change (u = p^-k) making the model p-integral; identity if already so.
CoordinateChange integralizing_change(const WeierstrassModel& e, Prime p);

}  // namespace ecval
