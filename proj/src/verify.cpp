#include "ecval/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ecval {

namespace {

Json valuation_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json model_json(const WeierstrassModel& e) {
  Json out = Json::array();
  for (const auto& a : e.coefficients()) out.push_back(a.str());
  return out;
}

Json point_json(const CurvePoint& P) {
  if (P.is_infinity()) return "O";
  return Json::array({P.x().str(), P.y().str()});
}

Rational json_rational(const Json& j, long line, const char* field) {
  if (!j.is_string()) throw CorpusError(line, std::string("field '") + field + "' must hold rational strings");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError& err) {
    throw CorpusError(line, std::string("field '") + field + "': " + err.what());
  }
}

// Collects checks for one entry.
class Checker {
 public:
  explicit Checker(std::vector<Check>& out) : out_(out) {}
  void add(const char* criterion, std::string name, bool passed, std::string detail = {}) {
    out_.push_back(Check{criterion, std::move(name), passed, std::move(detail)});
  }

 private:
  std::vector<Check>& out_;
};

std::string vstr(const Valuation& v) { return v.str(); }

bool kodaira_is(const TateResult& t, KodairaFamily f) { return t.kodaira.family == f; }

void tate_checks(Checker& c, const ReductionProfile& prof, Prime p) {
  const TateResult& t = prof.tate;
  const long m = t.kodaira.m;
  if (kodaira_is(t, KodairaFamily::InStar)) {
    c.add("A6", "v(Delta) = m + 4 + v(c4) for I_m*",
          t.vC4.is_finite() && t.vDelta == Valuation(m + 4 + t.vC4.value()),
          "vDelta=" + vstr(t.vDelta) + " vC4=" + vstr(t.vC4) + " m=" + std::to_string(m));
  }
  if (kodaira_is(t, KodairaFamily::In)) {
    c.add("A6", "v(j) = -m and v(c4) = 0 for I_m", t.vJ == Valuation(-m) && t.vC4 == Valuation(0),
          "vJ=" + vstr(t.vJ) + " vC4=" + vstr(t.vC4));
  }

  const TateResult again = run_tate(t.minimal_model, p);
  c.add("A6", "Tate on the minimal model is idempotent",
        again.kodaira == t.kodaira && again.vDelta == t.vDelta && again.cv == t.cv && again.to_minimal.u == Rational(1),
        again.kodaira.str() + " vDelta=" + vstr(again.vDelta));

  CoordinateChange shift = CoordinateChange::translation(Rational(1), Rational(-1), Rational(2));
  const TateResult moved = run_tate(apply_change(t.minimal_model, shift), p);
  c.add("A6", "Tate result invariant under the translation (1,1,-1,2)",
        moved.kodaira == t.kodaira && moved.cv == t.cv && moved.vDelta == t.vDelta, moved.kodaira.str());

  bool cv_ok = true;
  switch (t.reduction) {
    case ReductionKind::Good: cv_ok = t.cv == 1; break;
    case ReductionKind::Additive: cv_ok = t.cv >= 1 && t.cv <= 4; break;
    case ReductionKind::Multiplicative:
      cv_ok = t.split.value_or(false) ? t.cv == m : (t.cv == 1 || t.cv == 2);
      break;
  }
  c.add("A6", "c_v within the bounds for its reduction type", cv_ok, "cv=" + std::to_string(t.cv));
  c.add("A6", "normalized model differs from minimal by a translation", t.to_normalized.u == Rational(1));

  const auto& n = t.normalized_model;
  auto v = [&](const Rational& q) { return val(q, p); };
  if (prof.singular) {
    c.add("A6", "normalized model has v(a3), v(a4), v(a6) > 0",
          v(n.a3()) > Valuation(0) && v(n.a4()) > Valuation(0) && v(n.a6()) > Valuation(0), n.str());
  }
  if (kodaira_is(t, KodairaFamily::InStar)) {
    const bool ok = v(n.a1()) >= Valuation(1) && v(n.a2()) == Valuation(1) && v(n.a3()) >= Valuation(m / 2 + 2) &&
                    v(n.a4()) >= Valuation((m - 1) / 2 + 3) && v(n.a6()) >= Valuation(m + 3);
    c.add("A6", "normalized I_m* model has the coefficient valuations of the I_m* lemma", ok, n.str());
  }
}

void profile_checks(Checker& c, const ReductionProfile& prof, Prime p, const std::vector<DirectValues>& dv,
                    long nMax) {
  const auto& e = prof.tate.minimal_model;
  const auto& P = prof.point;
  c.add("profile", "singular iff m_P > 1", prof.singular == (prof.mP > 1));

  bool minimal = true;
  CurvePoint Q = P;
  for (long d = 1; d < prof.mP; ++d) {
    if (!is_singular(e, Q, p)) minimal = false;
    Q = add(e, Q, P);
  }
  minimal = minimal && !is_singular(e, mul(e, prof.mP, P), p);
  c.add("profile", "[d]P singular for d < m_P and [m_P]P non-singular", minimal);

  bool np_ok = true;
  for (long n = 1; n <= nMax; ++n) {
    const auto& d = dv[static_cast<std::size_t>(n - 1)];
    if (d.vPhi.is_infinite() || d.vPsiSq.is_infinite()) continue;
    const bool at_o = d.vPhi.value() - d.vPsiSq.value() < 0;
    if (at_o != (n % prof.nP == 0)) np_ok = false;
  }
  c.add("profile", "v(x([n]P)) < 0 exactly when n_P divides n", np_ok, "nP=" + std::to_string(prof.nP));

  const auto& en = prof.tate.normalized_model;
  const auto& Pn = prof.normalized_point;
  c.add("profile", "singularity agrees on minimal and normalized models", is_singular(en, Pn, p) == prof.singular);
  if (val(en.a3(), p) > Valuation(0) && val(en.a4(), p) > Valuation(0) && val(en.a6(), p) > Valuation(0)) {
    const bool crit = val(Pn.x(), p) > Valuation(0) && val(Pn.y(), p) > Valuation(0);
    c.add("profile", "singular iff v(x) > 0 and v(y) > 0 on the normalized model", crit == prof.singular);
  }

  const Rational psi2 = psi2_value(e, P.affine());
  c.add("profile", "v(psi_2^2), v(psi_3) agree on minimal and normalized models",
        val(psi2 * psi2, p) == prof.vPsi2Sq && val(psi3_value(e, P.x()), p) == prof.vPsi3);

  if (prof.aP) {
    const long m = prof.kodaira_m();
    bool sym = true;
    for (long n = 0; n <= nMax; ++n) sym = sym && r_n(*prof.aP, m, n) == r_n(m - *prof.aP, m, n);
    c.add("profile", "R_n(a_P, m) = R_n(m - a_P, m)", sym, "aP=" + std::to_string(*prof.aP));
  }
}

void decomposition_checks(Checker& c, const ReductionProfile& prof) {
  try {
    const TheoremPrediction t = table_decomposition(prof);
    c.add("A2", "slope n^2 + epsilon(n) = k_formula(n) for n <= 4 m_P", true,
          "slope=" + t.slope.str() + (t.untabulated ? " (untabulated row)" : ""));
    bool zero = true;
    for (long n = prof.mP; n <= 4 * prof.mP; n += prof.mP) zero = zero && t.epsilon.at(n).is_zero();
    c.add("A2", "epsilon(n) = 0 for n divisible by m_P", zero);
    c.add("A2", "m_P matches the row", t.table_mP == prof.mP,
          "row " + std::to_string(t.table_mP) + ", computed " + std::to_string(prof.mP));
    if (t.case_tag == row::kI2mStarCv4) {
      const long m = prof.kodaira_m();
      c.add("A2", "v(phi_2) is 4 or m + 4 on the I_2m* row",
            prof.vPhi2 == Valuation(4) || prof.vPhi2 == Valuation(m + 4), "vPhi2=" + vstr(prof.vPhi2));
    }
  } catch (const InternalError& err) {
    c.add("A2", "slope n^2 + epsilon(n) = k_formula(n) for n <= 4 m_P", false, err.what());
  }
}

void structural_checks(Checker& c, const DivPolySequence& seq) {
  const auto& e = seq.model();
  const auto& P = seq.point();
  bool law = true;
  CurvePoint Q = P;
  for (int n = 1; n <= 20; ++n) {
    if (!Q.is_infinity() && Q.x() * seq.psi_sq(n) != seq.phi(n)) law = false;
    Q = add(e, Q, P);
  }
  c.add("A5", "x([n]P) psi_n^2 = phi_n for n <= 20", law);
  const Rational psi2 = psi2_value(e, P.affine());
  c.add("A5", "psi_2^2 matches the x-only cubic", psi2 * psi2 == psi2_sq_x_only(e, P.x()));
  c.add("A5", "phi_2 matches the x-only quartic", seq.phi(2) == phi2_x_only(e, P.x()));
  bool eds = true;
  for (int m = 2; m <= 12; ++m) {
    for (int n = 1; n < m; ++n) {
      const Rational lhs = seq.psi(m + n) * seq.psi(m - n);
      const Rational rhs = seq.psi(m + 1) * seq.psi(m - 1) * seq.psi_sq(n) - seq.psi(n + 1) * seq.psi(n - 1) * seq.psi_sq(m);
      if (lhs != rhs) eds = false;
    }
  }
  c.add("A5", "elliptic divisibility identity for 1 <= n < m <= 12", eds);
}

void valuation_lemma_checks(Checker& c, const ReductionProfile& prof, Prime p) {
  if (!prof.singular) return;
  const auto& t = prof.tate;
  const long m = t.kodaira.m;
  if (kodaira_is(t, KodairaFamily::InStar)) {
    const bool two_sing = is_singular(t.minimal_model, dbl(t.minimal_model, prof.point), p);
    const long vx = prof.vXNormalized.value();
    std::string detail = "v(x)=" + std::to_string(vx) + " vPhi2=" + vstr(prof.vPhi2) + " vPsi3=" + vstr(prof.vPsi3) +
                         " vPsi2Sq=" + vstr(prof.vPsi2Sq) + " [2]P " + (two_sing ? "singular" : "non-singular");
    const long far = m % 2 == 1 ? (m + 3) / 2 : (m + 2) / 2;
    c.add("A7", "v(x(P)) is 1 or at least the far bound (I_m* trichotomy)", vx == 1 || vx >= far, detail);
    bool table = false;
    if (vx == 1) {
      table = !two_sing && prof.vPhi2 == Valuation(4) && prof.vPsi3 == Valuation(4) && prof.vPsi2Sq >= Valuation(4);
    } else if (vx >= far) {
      table = prof.vPhi2 == Valuation(m + 4) && prof.vPsi3 == Valuation(m + 4);
      if (m % 2 == 1) {
        table = table && two_sing && prof.vPsi2Sq == Valuation(m + 3);
      } else {
        table = table && !two_sing && prof.vPsi2Sq == Valuation(m + 4);
      }
    }
    c.add("A7", "I_m* valuation table for (m parity, v(x) regime)", table, detail);
    c.add("A7", "v(phi_2) = v(psi_3) and v(phi_2) is 4 or m + 4 on I_m*",
          prof.vPhi2 == prof.vPsi3 && (prof.vPhi2 == Valuation(4) || prof.vPhi2 == Valuation(m + 4)), detail);
  }
  if (prof.mP == 2) {
    c.add("A7", "m_P = 2 gives v(phi_2) = v(psi_3)", prof.vPhi2 == prof.vPsi3,
          "vPhi2=" + vstr(prof.vPhi2) + " vPsi3=" + vstr(prof.vPsi3));
  }
  if (prof.mP == 3 && t.reduction == ReductionKind::Additive) {
    DivPolySequence s(t.normalized_model, prof.normalized_point, 4);
    const Valuation vphi3 = val(s.phi(3), p);
    const Valuation vpsi2 = val(s.psi(2), p);
    c.add("A7", "m_P = 3 gives v(phi_3) = 3 v(psi_2^2)", vphi3 == 3 * prof.vPsi2Sq,
          "vPhi3=" + vstr(vphi3) + " vPsi2Sq=" + vstr(prof.vPsi2Sq));
    c.add("A7", "m_P = 3 gives v(psi_4) = 5 v(psi_2)", val(s.psi(4), p) == 5 * vpsi2);
  }
}

}  // namespace

std::string rational_list(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + v.str();
  return out;
}

CorpusEntry parse_corpus_line(const std::string& text, long line) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw CorpusError(line, std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object()) throw CorpusError(line, "expected a JSON object");
  for (const char* key : {"label", "a", "point", "prime"}) {
    if (!j.contains(key)) throw CorpusError(line, std::string("missing field '") + key + "'");
  }
  if (!j["label"].is_string()) throw CorpusError(line, "'label' must be a string");
  if (!j["a"].is_array() || j["a"].size() != 5) throw CorpusError(line, "'a' must list five rationals");
  if (!j["point"].is_array() || j["point"].size() != 2) throw CorpusError(line, "'point' must list two rationals");
  if (!j["prime"].is_number_integer()) throw CorpusError(line, "'prime' must be an integer");

  std::array<Rational, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = json_rational(j["a"][i], line, "a");
  const long p = j["prime"].get<long>();
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw CorpusError(line, std::to_string(p) + " is not prime");
  }
  std::optional<WeierstrassModel> e;
  try {
    e.emplace(a[0], a[1], a[2], a[3], a[4]);
  } catch (const PreconditionError& err) {
    throw CorpusError(line, err.what());
  }
  CurvePoint P(json_rational(j["point"][0], line, "point"), json_rational(j["point"][1], line, "point"));
  if (!on_curve(*e, P)) throw CorpusError(line, "point " + P.str() + " is not on the curve");
  if (!passes_torsion_guard(*e, P)) throw CorpusError(line, "point " + P.str() + " has finite order");

  CorpusEntry entry(line, j["label"].get<std::string>(), *e, P, p);
  if (j.contains("expect")) {
    const Json& x = j["expect"];
    if (!x.is_object() || !x.contains("kodaira") || !x.contains("cv") || !x.contains("mP") || !x.contains("row") ||
        !x["kodaira"].is_string() || !x["cv"].is_number_integer() || !x["mP"].is_number_integer() ||
        !x["row"].is_string()) {
      throw CorpusError(line, "'expect' needs kodaira (string), cv, mP (integers) and row (string)");
    }
    entry.expect = Expectation{x["kodaira"].get<std::string>(), x["cv"].get<int>(), x["mP"].get<long>(),
                               x["row"].get<std::string>()};
  }
  return entry;
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string text;
  long line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    out.push_back(parse_corpus_line(text, line));
  }
  return out;
}

Json entry_to_json(const CorpusEntry& e) {
  Json j;
  j["label"] = e.label;
  j["a"] = model_json(e.curve);
  j["point"] = point_json(e.point);
  j["prime"] = e.prime;
  if (e.expect) {
    j["expect"] = {{"kodaira", e.expect->kodaira}, {"cv", e.expect->cv}, {"mP", e.expect->mP}, {"row", e.expect->row}};
  }
  return j;
}

Json tate_to_json(const TateResult& t) {
  Json j;
  j["kodaira"] = t.kodaira.str();
  j["cv"] = t.cv;
  j["vDelta"] = valuation_json(t.vDelta);
  j["vC4"] = valuation_json(t.vC4);
  j["vJ"] = valuation_json(t.vJ);
  j["reduction"] = to_string(t.reduction);
  j["split"] = t.split ? Json(*t.split) : Json(nullptr);
  j["minimalModel"] = model_json(t.minimal_model);
  j["normalizedModel"] = model_json(t.normalized_model);
  return j;
}

Json profile_to_json(const ReductionProfile& prof) {
  Json j = tate_to_json(prof.tate);
  j["point"] = point_json(prof.point);
  j["singular"] = prof.singular;
  j["nP"] = prof.nP;
  j["mP"] = prof.mP;
  j["aP"] = prof.aP ? Json(*prof.aP) : Json(nullptr);
  j["twoPSingular"] = prof.two_P_singular ? Json(*prof.two_P_singular) : Json(nullptr);
  j["vPsi2Sq"] = valuation_json(prof.vPsi2Sq);
  j["vPsi3"] = valuation_json(prof.vPsi3);
  j["vPhi2"] = valuation_json(prof.vPhi2);
  j["vX"] = valuation_json(prof.vX);
  return j;
}

bool EntryReport::ok() const {
  if (error || !mismatches.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& target_rows() {
  static const std::vector<std::string> rows = {
      row::kIII, row::kIIIStar, row::kIV, row::kIVStar, row::kImStarCv2, row::kImStarOddCv4Ns,
      row::kImStarOddCv4Sing, row::kI2mStarCv4, row::kImSplit, row::kImNonSplit, row::kNonSingNegX,
      row::kNonSingNonNegX};
  return rows;
}

EntryReport verify_entry(const CorpusEntry& entry, long nMax) {
  EntryReport r;
  r.line = entry.line;
  r.label = entry.label;
  r.nMax = nMax;
  Checker c(r.checks);
  try {
    if (nMax < 1 || nMax > kNMaxGuardrail) throw InputError("n-max must lie in 1.." + std::to_string(kNMaxGuardrail));
    const Prime p(entry.prime);
    const ReductionProfile prof = profile_from_input(entry.curve, entry.point, p);
    r.row = case_tag(prof);
    r.untabulated = is_untabulated(prof);
    r.profile = profile_to_json(prof);
    const auto& e = prof.tate.minimal_model;
    const auto& P = prof.point;

    const bool psi_supported = !prof.singular || prof.tate.reduction == ReductionKind::Multiplicative;
    std::optional<StangeParams> params;
    if (psi_supported) params = engine_stange_params(prof);
    bool w_case = false;
    std::vector<long> extra;
    if (params) {
      Json f;
      f["b"] = params->b;
      f["h"] = params->h;
      f["j"] = params->j;
      f["s"] = params->s;
      f["w"] = valuation_json(params->w);
      f["bFallback"] = params->b_fallback;
      r.profile["formal"] = f;
      w_case = stange_w_applies(params->b, params->e, params->h, params->s, params->j);
      if (w_case) {
        long idx = prof.nP;
        for (int t = 0; t <= 2 && idx <= kNMaxGuardrail; ++t, idx *= p.value()) extra.push_back(idx);
      }
    }
    long N = std::max<long>(nMax, 24);
    for (long idx : extra) N = std::max(N, idx);
    const DivPolySequence seq(e, P, static_cast<int>(N));
    const auto dv = direct_values(seq, p);

    // A1: the main comparison.
    for (long n = 1; n <= nMax; ++n) {
      const long kf = k_formula(prof, n);
      const auto& d = dv[static_cast<std::size_t>(n - 1)];
      if (d.k != Valuation(kf)) r.mismatches.push_back(Mismatch{n, kf, d.k});
    }
    if (entry.expect) {
      const auto& x = *entry.expect;
      const bool ok = x.kodaira == prof.tate.kodaira.str() && x.cv == prof.tate.cv && x.mP == prof.mP && x.row == r.row;
      c.add("A1", "pinned expectation", ok,
            "expected " + x.kodaira + "/" + std::to_string(x.cv) + "/" + std::to_string(x.mP) + "/" + x.row + ", got " +
                prof.tate.kodaira.str() + "/" + std::to_string(prof.tate.cv) + "/" + std::to_string(prof.mP) + "/" +
                r.row);
    }

    if (prof.singular) decomposition_checks(c, prof);

    // A3: division polynomial valuation predictions.
    if (params) {
      std::vector<long> indices;
      for (long n = 1; n <= nMax; ++n) indices.push_back(n);
      for (long idx : extra) indices.push_back(idx);
      std::string bad;
      for (long n : indices) {
        const Valuation pred = predict_psi_val(prof, *params, n);
        const Valuation got = dv[static_cast<std::size_t>(n - 1)].vPsi;
        if (pred != got) bad += " n=" + std::to_string(n) + ":" + vstr(pred) + "/" + vstr(got);
      }
      c.add("A3", "predicted v(psi_n) matches the division polynomial", bad.empty(),
            bad.empty() ? std::to_string(indices.size()) + " indices" : "predicted/actual" + bad);
      if (w_case) {
        std::string wbad;
        for (long idx : extra) {
          if (predict_psi_val(prof, *params, idx) != dv[static_cast<std::size_t>(idx - 1)].vPsi) {
            wbad += " " + std::to_string(idx);
          }
        }
        c.add("A8", "w from the b = 2, s = 1, h = 0 case reproduces v(psi) at n_P p^t, t <= 2", wbad.empty(),
              "w=" + vstr(params->w) + (wbad.empty() ? "" : " failing at" + wbad));
      }
    }
    {
      std::string bad;
      long checked = 0;
      for (long n = 1; n <= nMax; ++n) {
        const auto& d = dv[static_cast<std::size_t>(n - 1)];
        std::optional<Valuation> vx;
        if (d.vPhi.is_finite() && d.vPsiSq.is_finite()) vx = Valuation(d.vPhi.value() - d.vPsiSq.value());
        const auto pred = predict_phi_val(prof, n, vx);
        if (!pred) continue;
        ++checked;
        if (*pred != d.vPhi) bad += " n=" + std::to_string(n) + ":" + vstr(*pred) + "/" + vstr(d.vPhi);
      }
      if (checked > 0) {
        c.add("A3", "predicted v(phi_n) matches where the closed form applies", bad.empty(),
              bad.empty() ? std::to_string(checked) + " indices" : "predicted/actual" + bad);
      }
    }

    structural_checks(c, seq);
    tate_checks(c, prof, p);
    profile_checks(c, prof, p, dv, nMax);
    valuation_lemma_checks(c, prof, p);

    // A8: formal group quantities.
    {
      const CurvePoint Q = mul(e, prof.nP, P);
      const Valuation vx = val(Q.x(), p);
      const Valuation s = v_x_over_y(Q, p);
      const bool ok = vx.is_finite() && vx.value() % 2 == 0 && s == Valuation(-vx.value() / 2);
      c.add("A8", "s_P = -v(x([n_P]P))/2", ok, "s=" + vstr(s) + " v(x)=" + vstr(vx));
    }
    if (prof.tate.reduction == ReductionKind::Good && params) {
      const long pv = p.value();
      c.add("A8", "good reduction gives b in {p, p^2}", params->b == pv || params->b == pv * pv,
            "b=" + std::to_string(params->b));
    }
  } catch (const std::exception& err) {
    r.error = err.what();
  }
  return r;
}

long VerificationReport::mismatch_count() const {
  long n = 0;
  for (const auto& e : entries) n += static_cast<long>(e.mismatches.size());
  return n;
}

long VerificationReport::failed_check_count() const {
  long n = 0;
  for (const auto& e : entries) n += std::count_if(e.checks.begin(), e.checks.end(), [](const Check& c) { return !c.passed; });
  return n;
}

long VerificationReport::error_count() const {
  return std::count_if(entries.begin(), entries.end(), [](const EntryReport& e) { return e.error.has_value(); });
}

namespace {

std::vector<std::pair<long, long>> split_pairs(const std::vector<EntryReport>& entries) {
  std::set<std::pair<long, long>> pairs;
  for (const auto& e : entries) {
    if (e.row != row::kImSplit || e.error) continue;
    const long m = e.profile["vDelta"].get<long>();
    pairs.insert({e.profile["aP"].get<long>(), m});
  }
  return {pairs.begin(), pairs.end()};
}

VerificationReport assemble(std::vector<EntryReport> reports) {
  VerificationReport out;
  out.entries = std::move(reports);
  std::set<std::string> seen;
  for (const auto& e : out.entries) {
    if (!e.error) seen.insert(e.row);
  }
  for (const auto& row : target_rows()) {
    if (row == row::kImSplit) {
      const auto pairs = split_pairs(out.entries);
      if (static_cast<int>(pairs.size()) < kSplitPairsNeeded) {
        out.uncovered.push_back(row + " (" + std::to_string(pairs.size()) + " of " +
                                std::to_string(kSplitPairsNeeded) + " (a_P, m) pairs)");
      }
    } else if (!seen.count(row)) {
      out.uncovered.push_back(row);
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_corpus_serial(const std::vector<CorpusEntry>& entries, long nMax) {
  std::vector<EntryReport> reports;
  reports.reserve(entries.size());
  for (const auto& e : entries) reports.push_back(verify_entry(e, nMax));
  return assemble(std::move(reports));
}

VerificationReport verify_corpus(const std::vector<CorpusEntry>& entries, long nMax) {
  std::vector<EntryReport> reports(entries.size());
  const long count = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    reports[static_cast<std::size_t>(i)] = verify_entry(entries[static_cast<std::size_t>(i)], nMax);
  }
  return assemble(std::move(reports));
}

Json VerificationReport::to_json() const {
  Json j;
  Json list = Json::array();
  std::map<std::string, std::vector<std::string>> coverage;
  for (const auto& e : entries) {
    Json x;
    x["line"] = e.line;
    x["label"] = e.label;
    x["row"] = e.row;
    x["untabulated"] = e.untabulated;
    x["nMax"] = e.nMax;
    x["profile"] = e.profile;
    Json mm = Json::array();
    for (const auto& m : e.mismatches) {
      mm.push_back({{"n", m.n}, {"kFormula", m.formula}, {"kDirect", valuation_json(m.direct)}});
    }
    x["mismatches"] = mm;
    Json checks = Json::array();
    for (const auto& c : e.checks) {
      checks.push_back({{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    x["checks"] = checks;
    x["error"] = e.error ? Json(*e.error) : Json(nullptr);
    x["ok"] = e.ok();
    list.push_back(x);
    if (!e.error) coverage[e.row].push_back(e.label);
  }
  j["entries"] = list;
  Json cov;
  for (const auto& row : target_rows()) cov[row] = coverage.count(row) ? Json(coverage[row]) : Json::array();
  for (const auto& [row, labels] : coverage) {
    if (!cov.contains(row)) cov[row] = labels;
  }
  j["coverage"] = cov;
  Json pairs = Json::array();
  for (const auto& [a, m] : split_pairs(entries)) pairs.push_back({{"aP", a}, {"m", m}});
  j["splitPairs"] = pairs;
  j["uncovered"] = uncovered;
  j["summary"] = {{"entries", entries.size()},
                  {"mismatches", mismatch_count()},
                  {"failedChecks", failed_check_count()},
                  {"errors", error_count()},
                  {"ok", ok()}};
  if (entries.empty()) j["warning"] = "0 entries";
  return j;
}

}  // namespace ecval
