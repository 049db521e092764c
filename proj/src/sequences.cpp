#include "ecval/sequences.hpp"

namespace ecval {

long r_n(long a, long ell, long n) {
  if (ell < 1) throw InputError("R_n needs l >= 1");
  if (n < 0) throw InputError("R_n needs n >= 0");
  Integer L(ell);
  Integer ah(lnr(a, ell));
  Integer nn(n);
  Integer na = nn * Integer(a);
  Integer nah = na % L;
  if (nah < 0) nah += L;
  Integer top = nn * nn * ah * (L - ah) - nah * (L - nah);
  Integer twoL = 2 * L;
  if (top % twoL != 0) {
    throw InternalError("R_n numerator not divisible by 2l for a=" + std::to_string(a) +
                        " l=" + std::to_string(ell) + " n=" + std::to_string(n));
  }
  Integer q = top / twoL;
  if (q < 0) throw InternalError("negative R_n");
  return to_long(q);
}

long stange_j(long b, long e, long h, long s) {
  if (b == 1) return 0;
  long base = (b - 1) * s + h;
  if (base <= 0) throw InputError("S_n parameters give (b-1)s + h <= 0");
  long j = 0;
  long scale = 1;
  while (e > scale * base) {
    scale *= b;
    ++j;
  }
  return j;
}

bool stange_w_applies(long b, long e, long h, long s, long j) {
  if (b <= 1) return false;
  long scale = 1;
  for (long i = 0; i < j; ++i) scale *= b;
  return e == scale * ((b - 1) * s + h);
}

Valuation s_n(const StangeParams& params, Prime p, long m) {
  if (m == 0) throw InputError("S_n index must be non-zero");
  const long b = params.b;
  const long j = params.j;
  long vm = val(Integer(m), p).value();
  // (b^k - 1)/(b - 1) h, with the b = 1 convention that the term vanishes.
  auto geometric = [&](long k) -> long {
    if (b == 1) return 0;
    long sum = 0, term = 1;
    for (long i = 0; i < k; ++i) {
      sum += term;
      term *= b;
    }
    return sum * params.h;
  };
  auto bpow = [&](long k) {
    long out = 1;
    for (long i = 0; i < k; ++i) out *= b;
    return out;
  };
  if (vm > j) {
    return Valuation(bpow(j) * params.s + geometric(j) + params.e * (vm - j)) + params.w;
  }
  return Valuation(bpow(vm) * params.s + geometric(vm));
}

}  // namespace ecval
