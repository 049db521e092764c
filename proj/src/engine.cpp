#include "ecval/engine.hpp"

#include <numeric>

namespace ecval {

namespace {

bool is_family(const ReductionProfile& prof, KodairaFamily f) { return prof.tate.kodaira.family == f; }

long checked_quarter(long numerator, long denom, const char* what) {
  if (numerator % denom != 0) {
    throw InternalError(std::string("non-integral k from the ") + what + " rule");
  }
  return numerator / denom;
}

long finite(const Valuation& v, const char* what) {
  if (v.is_infinite()) throw InternalError(std::string("infinite ") + what);
  return v.value();
}

// k for additive c_v = 2 (and c_v = 4 with [2]P non-singular).
long two_rule(long vpsi3, long n) {
  const long nn = n * n;
  return n % 2 == 0 ? checked_quarter(vpsi3 * nn, 4, "c_v = 2") : checked_quarter(vpsi3 * (nn - 1), 4, "c_v = 2");
}

EpsilonRule constant_off_zero(long modulus, const Rational& off) {
  EpsilonRule r;
  r.modulus = modulus;
  r.by_residue.assign(static_cast<std::size_t>(modulus), -off);
  r.by_residue[0] = Rational(0);
  return r;
}

}  // namespace

std::string case_tag(const ReductionProfile& prof) {
  if (!prof.singular) {
    return prof.vX < Valuation(0) ? row::kNonSingNegX : row::kNonSingNonNegX;
  }
  const auto& t = prof.tate;
  if (t.reduction == ReductionKind::Multiplicative) {
    return t.split.value_or(false) ? row::kImSplit : row::kImNonSplit;
  }
  if (t.reduction != ReductionKind::Additive) throw InternalError("singular point on a good-reduction model");
  switch (t.kodaira.family) {
    case KodairaFamily::IIIStar: return row::kIIIStar;
    case KodairaFamily::IVStar: return row::kIVStar;
    case KodairaFamily::III: return row::kIII;
    case KodairaFamily::IV: return row::kIV;
    case KodairaFamily::I0Star:
      return t.cv == 4 ? row::kI0StarCv4 : row::kI0StarCv2;
    case KodairaFamily::InStar:
      if (t.cv == 2) return row::kImStarCv2;
      if (t.cv != 4) break;
      if (t.kodaira.m % 2 == 0) return row::kI2mStarCv4;
      return prof.two_P_singular.value_or(false) ? row::kImStarOddCv4Sing : row::kImStarOddCv4Ns;
    default:
      break;
  }
  throw InternalError("singular point on Kodaira type " + t.kodaira.str() + " with c_v = " +
                      std::to_string(t.cv));
}

bool is_untabulated(const ReductionProfile& prof) {
  return prof.singular && is_family(prof, KodairaFamily::I0Star);
}

std::vector<DirectValues> direct_values(const DivPolySequence& seq, Prime p) {
  std::vector<DirectValues> out;
  out.reserve(static_cast<std::size_t>(seq.size()));
  for (int n = 1; n <= seq.size(); ++n) {
    DirectValues d;
    d.n = n;
    d.vPsi = val(seq.psi(n), p);
    d.vPsiSq = 2 * d.vPsi;
    d.vPhi = val(seq.phi(n), p);
    d.k = min(d.vPhi, d.vPsiSq);
    out.push_back(d);
  }
  return out;
}

Valuation k_direct(const WeierstrassModel& e, const CurvePoint& P, Prime p, long n) {
  if (n < 1) throw InputError("k is defined for n >= 1");
  require_on_curve(e, P);
  require_infinite_order(e, P);
  DivPolySequence seq(e, P, static_cast<int>(n));
  return min(val(seq.phi(static_cast<int>(n)), p), 2 * val(seq.psi(static_cast<int>(n)), p));
}

long k_formula(const ReductionProfile& prof, long n) {
  if (n < 1) throw InputError("k is defined for n >= 1");
  const long nn = n * n;
  if (!prof.singular) {
    if (prof.vX.is_infinite() || prof.vX >= Valuation(0)) return 0;
    return nn * prof.vX.value();
  }
  const auto& t = prof.tate;
  if (t.reduction == ReductionKind::Multiplicative) {
    if (!prof.aP) throw InternalError("multiplicative singular profile without a_P");
    return 2 * r_n(*prof.aP, t.kodaira.m, n);
  }
  if (t.reduction != ReductionKind::Additive) throw InternalError("singular point with good reduction");
  switch (t.cv) {
    case 2:
      return two_rule(finite(prof.vPsi3, "v(psi_3)"), n);
    case 3: {
      const long v2 = finite(prof.vPsi2Sq, "v(psi_2^2)");
      return n % 3 == 0 ? checked_quarter(v2 * nn, 3, "c_v = 3") : checked_quarter(v2 * (nn - 1), 3, "c_v = 3");
    }
    case 4: {
      if (!prof.two_P_singular) throw InternalError("c_v = 4 profile without the [2]P flag");
      const long v3 = finite(prof.vPsi3, "v(psi_3)");
      if (!*prof.two_P_singular) return two_rule(v3, n);
      switch (n % 4) {
        case 0: return checked_quarter(v3 * nn, 4, "c_v = 4");
        case 2: return checked_quarter(v3 * nn, 4, "c_v = 4") - 1;
        default: return checked_quarter(v3 * (nn - 1), 4, "c_v = 4");
      }
    }
    default:
      throw InternalError("additive singular point with c_v = " + std::to_string(t.cv));
  }
}

TheoremPrediction table_decomposition(const ReductionProfile& prof) {
  if (!prof.singular) throw PreconditionError("the slope decomposition needs a singular point");
  TheoremPrediction out;
  out.case_tag = case_tag(prof);
  const long m = prof.kodaira_m();
  auto simple = [&](Rational slope, long mP) {
    out.slope = slope;
    out.table_mP = mP;
    out.epsilon = constant_off_zero(mP, slope);
  };
  const std::string& tag = out.case_tag;
  if (tag == row::kIIIStar) {
    simple(Rational(3, 2), 2);
  } else if (tag == row::kIVStar) {
    simple(Rational(4, 3), 3);
  } else if (tag == row::kIII) {
    simple(Rational(1, 2), 2);
  } else if (tag == row::kIV) {
    simple(Rational(2, 3), 3);
  } else if (tag == row::kImStarCv2 || tag == row::kImStarOddCv4Ns) {
    simple(Rational(1), 2);
  } else if (tag == row::kImStarOddCv4Sing) {
    const Rational s(Integer(m + 4), Integer(4));
    out.slope = s;
    out.table_mP = 4;
    out.epsilon.modulus = 4;
    out.epsilon.by_residue = {Rational(0), -s, Rational(-1), -s};
  } else if (tag == row::kI2mStarCv4) {
    simple(Rational(Integer(finite(prof.vPhi2, "v(phi_2)")), Integer(4)), 2);
  } else if (tag == row::kI0StarCv2 || tag == row::kI0StarCv4) {
    out.untabulated = true;
    simple(Rational(Integer(finite(prof.vPsi3, "v(psi_3)")), Integer(4)), 2);
  } else if (tag == row::kImSplit || tag == row::kImNonSplit) {
    const long a = *prof.aP;
    out.slope = Rational(Integer(a * (m - a)), Integer(m));
    out.table_mP = m / std::gcd(a, m);
    out.epsilon.modulus = m;
    for (long r = 0; r < m; ++r) {
      const long np = lnr(a * r, m);
      out.epsilon.by_residue.push_back(Rational(Integer(-np * (m - np)), Integer(m)));
    }
  } else {
    throw InternalError("no decomposition for row " + tag);
  }
  for (long n = 1; n <= 4 * prof.mP; ++n) {
    if (out.value(n) != Rational(k_formula(prof, n))) {
      throw InternalError("slope/epsilon decomposition disagrees with k_formula at n = " + std::to_string(n) +
                          " for row " + tag);
    }
  }
  return out;
}

Valuation predict_psi_val(const ReductionProfile& prof, const StangeParams& params, long n) {
  if (n < 1) throw InputError("psi prediction needs n >= 1");
  const Prime p(prof.prime());
  const bool divides = n % prof.nP == 0;
  if (!prof.singular) {
    Valuation base(0);
    if (prof.vX < Valuation(0)) {
      const long vx = prof.vX.value();
      if (vx % 2 != 0) throw InternalError("odd negative v(x) on a minimal model");
      base = Valuation(vx / 2 * n * n);
    }
    return divides ? base + s_n(params, p, n / prof.nP) : base;
  }
  if (prof.tate.reduction == ReductionKind::Multiplicative) {
    if (params.b != p.value() || params.h != 0) {
      throw InputError("multiplicative psi prediction needs b = p and h = 0");
    }
    const Valuation base(r_n(*prof.aP, prof.kodaira_m(), n));
    return divides ? base + s_n(params, p, n / prof.nP) : base;
  }
  throw PreconditionError("no psi prediction for singular points with additive reduction");
}

std::optional<Valuation> predict_phi_val(const ReductionProfile& prof, long n, std::optional<Valuation> vx_n) {
  if (n < 1) throw InputError("phi prediction needs n >= 1");
  const bool divides = n % prof.nP == 0;
  if (!prof.singular) {
    if (divides || (vx_n && *vx_n == Valuation(0))) {
      if (prof.vX.is_infinite() || prof.vX >= Valuation(0)) return Valuation(0);
      return Valuation(prof.vX.value() * n * n);
    }
    return std::nullopt;
  }
  if (prof.tate.reduction == ReductionKind::Multiplicative && divides) {
    return Valuation(2 * r_n(*prof.aP, prof.kodaira_m(), n));
  }
  return std::nullopt;
}

StangeParams engine_stange_params(const ReductionProfile& prof) {
  const Prime p(prof.prime());
  const WeierstrassModel& e = prof.tate.minimal_model;
  if (!prof.singular) return stange_params(e, prof.point, p, prof.nP, extract_b_h(e, p));
  if (prof.tate.reduction == ReductionKind::Multiplicative) {
    FormalHeightData bh;
    bh.b = p.value();
    bh.h = 0;
    return stange_params(e, prof.point, p, prof.nP, bh);
  }
  throw PreconditionError("no formal-group parameters for singular points with additive reduction");
}

}  // namespace ecval
