#pragma once

// Division polynomials psi_n and their companions phi_n, evaluated at a
// rational point. Values only; no symbolic polynomials are ever formed.

#include <vector>

#include "ecval/curve.hpp"

namespace ecval {

/// psi_n(P), phi_n(P) for 1 <= n <= N.
class DivPolySequence {
 public:
  /// Bottom-up recurrence. Requires P affine with psi_2(P) != 0 and N >= 1.
  DivPolySequence(const WeierstrassModel& e, const CurvePoint& P, int N);

  int size() const { return N_; }
  /// psi_n for -1 <= n <= N + 1 (psi_0 = 0, psi_{-1} = -1).
  const Rational& psi(int n) const;
  /// phi_n for 1 <= n <= N.
  const Rational& phi(int n) const;
  /// psi_n^2.
  Rational psi_sq(int n) const { return psi(n) * psi(n); }

  const WeierstrassModel& model() const { return model_; }
  const CurvePoint& point() const { return point_; }

 private:
  WeierstrassModel model_;
  CurvePoint point_;
  int N_;
  std::vector<Rational> psi_;  // index n + 1
  std::vector<Rational> phi_;  // index n
};

DivPolySequence psi_sequence(const WeierstrassModel& e, const CurvePoint& P, int N);

/// phi_n(P) via x psi_n^2 - psi_{n-1} psi_{n+1}; for n = 2 also checked
/// against the x-only quartic.
Rational phi_at(const WeierstrassModel& e, const CurvePoint& P, int n);

/// psi_2(P) = 2y + a1 x + a3.
Rational psi2_value(const WeierstrassModel& e, const AffinePoint& P);
/// psi_3(P) = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8.
Rational psi3_value(const WeierstrassModel& e, const Rational& x);
/// x-only form of psi_2^2: 4x^3 + b2 x^2 + 2 b4 x + b6.
Rational psi2_sq_x_only(const WeierstrassModel& e, const Rational& x);
/// x-only form of phi_2: x^4 - b4 x^2 - 2 b6 x - b8.
Rational phi2_x_only(const WeierstrassModel& e, const Rational& x);

}  // namespace ecval
