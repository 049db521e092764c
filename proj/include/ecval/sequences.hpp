#pragma once

// The integer sequences R_n(a, l) and S_n(p, b, e, h, s, w).

#include "ecval/numbers.hpp"

namespace ecval {

/// (n^2 a^(l - a^) - (na)^(l - (na)^)) / (2l), where x^ is the least
/// non-negative residue modulo l. Requires l >= 1, n >= 0.
long r_n(long a, long ell, long n);

/// Parameters of the staircase sequence S_n.
struct StangeParams {
  long b = 1;  // 1 or a positive multiple of p
  long e = 1;  // v(p); always 1 over Q_p
  long h = 0;
  long j = 0;
  long s = 1;
  Valuation w = Valuation(0);
  /// b = 1 came from the "no unit coefficient" fallback, not from a scan hit.
  bool b_fallback = false;
};

/// Smallest j >= 0 with e <= b^j((b - 1)s + h); 0 when b = 1.
long stange_j(long b, long e, long h, long s);
/// True when b > 1 and the defining inequality of j is an equality.
bool stange_w_applies(long b, long e, long h, long s, long j);

/// S_m for the index m (callers pass n / n_P). Infinite w propagates on the
/// upper branch.
Valuation s_n(const StangeParams& params, Prime p, long m);

}  // namespace ecval
