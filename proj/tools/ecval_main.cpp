// Command-line front end: profile, kval, psi, formal-group, seq, verify.
//
// Exit codes: 0 success; 1 verification mismatch; 2 malformed input
// (including corpus parse errors); 3 precondition violation (torsion point,
// singular curve, non-prime); 4 resource limit or internal error.

#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ecval/verify.hpp"

using namespace ecval;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct CommonArgs {
  std::string curve;
  std::string point;
  long prime = 0;
  long n_max = kDefaultNMax;
  bool json = false;
};

Prime checked_prime(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError(std::to_string(p) + " is not prime");
  }
  return Prime(p);
}

long checked_n_max(long n) {
  if (n < 1 || n > kNMaxGuardrail) {
    throw InputError("--n-max must lie in 1.." + std::to_string(kNMaxGuardrail));
  }
  return n;
}

Json valuation_field(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

struct Loaded {
  WeierstrassModel input;
  CurvePoint point;
  Prime p;
};

Loaded load(const CommonArgs& a, bool need_point) {
  const Prime p = checked_prime(a.prime);
  WeierstrassModel e = WeierstrassModel::parse(a.curve);
  CurvePoint P = CurvePoint::infinity();
  if (need_point && a.point.empty()) throw InputError("--point is required");
  if (!a.point.empty()) {
    P = CurvePoint::parse(a.point);
    require_on_curve(e, P);
  }
  return Loaded{std::move(e), std::move(P), p};
}

int cmd_profile(const CommonArgs& a) {
  const Loaded in = load(a, false);
  Json out;
  out["curve"] = Json::array();
  for (const auto& c : in.input.coefficients()) out["curve"].push_back(c.str());
  out["prime"] = in.p.value();
  const TateResult tate = run_tate(apply_change(in.input, integralizing_change(in.input, in.p)), in.p);
  out["tate"] = tate_to_json(tate);
  if (in.point.is_infinity()) {
    std::cout << out.dump(a.json ? -1 : 2) << "\n";
    return 0;
  }
  const bool infinite_order = passes_torsion_guard(in.input, in.point);
  out["point"] = {{"x", in.point.x().str()}, {"y", in.point.y().str()}, {"onCurve", true},
                  {"infiniteOrder", infinite_order}};
  if (!infinite_order) {
    std::cout << out.dump(a.json ? -1 : 2) << "\n";
    std::cerr << "error: point " << in.point.str() << " has finite order\n";
    return kExitPrecondition;
  }
  const ReductionProfile prof = profile_from_input(in.input, in.point, in.p);
  out["profile"] = profile_to_json(prof);
  out["row"] = case_tag(prof);
  out["untabulated"] = is_untabulated(prof);
  if (prof.singular) out["normalizedHeight"] = table_decomposition(prof).slope.str();
  std::cout << out.dump(a.json ? -1 : 2) << "\n";
  return 0;
}

int cmd_kval(const CommonArgs& a, const std::string& mode) {
  const Loaded in = load(a, true);
  const long n_max = checked_n_max(a.n_max);
  const ReductionProfile prof = profile_from_input(in.input, in.point, in.p);
  const bool want_formula = mode != "direct";
  const bool want_direct = mode != "formula";
  std::optional<std::vector<DirectValues>> dv;
  if (want_direct) dv = direct_values(DivPolySequence(prof.tate.minimal_model, prof.point, static_cast<int>(n_max)), in.p);
  bool all_match = true;
  for (long n = 1; n <= n_max; ++n) {
    Json line;
    line["n"] = n;
    std::optional<long> kf;
    if (want_formula) {
      kf = k_formula(prof, n);
      line["kFormula"] = *kf;
    }
    if (want_direct) {
      const auto& d = (*dv)[static_cast<std::size_t>(n - 1)];
      line["kDirect"] = valuation_field(d.k);
      line["vPhi"] = valuation_field(d.vPhi);
      line["vPsiSq"] = valuation_field(d.vPsiSq);
      if (kf) {
        const bool match = d.k == Valuation(*kf);
        line["match"] = match;
        all_match = all_match && match;
      }
    }
    std::cout << line.dump() << "\n";
  }
  return all_match ? 0 : kExitMismatch;
}

int cmd_psi(const CommonArgs& a) {
  const Loaded in = load(a, true);
  const long n_max = checked_n_max(a.n_max);
  const ReductionProfile prof = profile_from_input(in.input, in.point, in.p);
  const DivPolySequence seq(prof.tate.minimal_model, prof.point, static_cast<int>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    Json line;
    line["n"] = n;
    line["psi"] = seq.psi(n).str();
    line["phi"] = seq.phi(n).str();
    line["vPsi"] = valuation_field(val(seq.psi(n), in.p));
    line["vPhi"] = valuation_field(val(seq.phi(n), in.p));
    std::cout << line.dump() << "\n";
  }
  return 0;
}

int cmd_formal_group(const CommonArgs& a, long m, int order) {
  const Loaded in = load(a, false);
  if (m < 1) throw InputError("--m must be positive");
  if (order < 1 || order > 400) throw InputError("--order must lie in 1..400");
  const WeierstrassModel e = apply_change(in.input, integralizing_change(in.input, in.p));
  const TateResult t = run_tate(e, in.p);
  const RationalSeries s = mult_by_m_series(t.minimal_model, m, order);
  Json out;
  out["model"] = Json::array();
  for (const auto& c : t.minimal_model.coefficients()) out["model"].push_back(c.str());
  out["m"] = m;
  out["order"] = order;
  Json coeffs = Json::array();
  for (int i = 1; i <= order; ++i) {
    if (s[i].is_zero()) continue;
    coeffs.push_back({{"i", i}, {"c", s[i].str()}, {"v", valuation_field(val(s[i], in.p))}});
  }
  out["coefficients"] = coeffs;
  if (in.p.value() <= kFormalHeightPrimeLimit) {
    const FormalHeightData bh = extract_b_h(t.minimal_model, in.p);
    out["b"] = bh.b;
    out["h"] = bh.h;
    out["bFallback"] = bh.fallback;
  }
  std::cout << out.dump(a.json ? -1 : 2) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, long n_max, bool serial, bool json) {
  checked_n_max(n_max);
  std::ifstream in(path);
  if (!in) throw InputError("cannot read corpus file " + path);
  const auto entries = parse_corpus(in);
  const VerificationReport report = serial ? verify_corpus_serial(entries, n_max) : verify_corpus(entries, n_max);
  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    if (entries.empty()) std::cout << "warning: 0 entries\n";
    for (const auto& e : report.entries) {
      const long failed = std::count_if(e.checks.begin(), e.checks.end(), [](const Check& c) { return !c.passed; });
      std::cout << (e.ok() ? "PASS " : "FAIL ") << "line " << e.line << " [" << e.row << "] " << e.label
                << ": n<=" << e.nMax << ", " << e.mismatches.size() << " mismatches, " << e.checks.size()
                << " checks (" << failed << " failed)";
      if (e.error) std::cout << ", error: " << *e.error;
      std::cout << "\n";
      for (const auto& c : e.checks) {
        if (!c.passed) std::cout << "    failed " << c.criterion << " " << c.name << ": " << c.detail << "\n";
      }
      for (const auto& m : e.mismatches) {
        std::cout << "    n=" << m.n << " formula " << m.formula << " direct " << m.direct << "\n";
      }
    }
    for (const auto& u : report.uncovered) std::cout << "UNCOVERED " << u << "\n";
    std::cout << "entries " << report.entries.size() << ", mismatches " << report.mismatch_count()
              << ", failed checks " << report.failed_check_count() << ", errors " << report.error_count() << "\n";
  }
  return report.ok() ? 0 : kExitMismatch;
}

int cmd_seq(const std::string& which, long a, long ell, long n, StangeParams params, long p, long m) {
  Json out;
  if (which == "rn") {
    out["a"] = a;
    out["l"] = ell;
    out["n"] = n;
    out["R"] = r_n(a, ell, n);
  } else if (which == "sn") {
    const Prime pr = checked_prime(p);
    params.j = stange_j(params.b, params.e, params.h, params.s);
    if (!stange_w_applies(params.b, params.e, params.h, params.s, params.j)) params.w = Valuation(0);
    out["b"] = params.b;
    out["e"] = params.e;
    out["h"] = params.h;
    out["j"] = params.j;
    out["s"] = params.s;
    out["w"] = valuation_field(params.w);
    out["m"] = m;
    out["S"] = valuation_field(s_n(params, pr, m));
  } else {
    throw InputError("seq needs 'rn' or 'sn'");
  }
  std::cout << out.dump() << "\n";
  return 0;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool point, bool n_max) {
  cmd->add_option("--curve", a.curve, "a1,a2,a3,a4,a6 as rationals")->required();
  cmd->add_option("--prime", a.prime, "The prime p")->required();
  if (point) cmd->add_option("--point", a.point, "x,y as rationals");
  if (n_max) cmd->add_option("--n-max", a.n_max, "Largest n (default 40, at most 200)");
  cmd->add_flag("--json", a.json, "Compact JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact valuations of elliptic division polynomials"};
  app.require_subcommand(1);

  CommonArgs profile_args, kval_args, psi_args, fg_args;
  auto* profile = app.add_subcommand("profile", "Tate's algorithm and the reduction profile of a point");
  add_common(profile, profile_args, true, false);

  std::string mode = "both";
  auto* kval = app.add_subcommand("kval", "k_{v,n}(P) by formula and directly, one JSON line per n");
  add_common(kval, kval_args, true, true);
  kval->add_option("--mode", mode, "formula, direct or both")->check(CLI::IsMember({"formula", "direct", "both"}));

  auto* psi = app.add_subcommand("psi", "psi_n(P) and phi_n(P) on the minimal model with valuations");
  add_common(psi, psi_args, true, true);

  long fg_m = 0;
  int fg_order = 10;
  auto* fg = app.add_subcommand("formal-group", "[m]T in the formal group of the minimal model");
  add_common(fg, fg_args, false, false);
  fg->add_option("--m", fg_m, "Multiplier (default p)");
  fg->add_option("--order", fg_order, "Truncation order (default 10)");

  std::string seq_which;
  long seq_a = 0, seq_l = 1, seq_n = 0, seq_p = 2, seq_m = 1;
  StangeParams seq_params;
  std::string seq_w = "0";
  bool seq_json = false;
  auto* seq = app.add_subcommand("seq", "Evaluate R_n or S_n");
  seq->group("");
  seq->add_option("which", seq_which, "rn or sn")->required();
  seq->add_option("--a", seq_a);
  seq->add_option("--l", seq_l);
  seq->add_option("--n", seq_n);
  seq->add_option("--b", seq_params.b);
  seq->add_option("--e", seq_params.e);
  seq->add_option("--height", seq_params.h);
  seq->add_option("--s", seq_params.s);
  seq->add_option("--w", seq_w, "non-negative integer or inf");
  seq->add_option("--prime", seq_p);
  seq->add_option("--m", seq_m);
  seq->add_flag("--json", seq_json);

  std::string corpus;
  long verify_n_max = kDefaultNMax;
  bool serial = false;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suite over a JSON-lines corpus");
  verify->add_option("--corpus", corpus, "Corpus file")->required();
  verify->add_option("--n-max", verify_n_max, "Largest n (default 40, at most 200)");
  verify->add_flag("--serial", serial, "Use the serial reference loop");
  verify->add_flag("--json", verify_json, "Full JSON report instead of the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*profile) return cmd_profile(profile_args);
    if (*kval) return cmd_kval(kval_args, mode);
    if (*psi) return cmd_psi(psi_args);
    if (*fg) return cmd_formal_group(fg_args, fg_m > 0 ? fg_m : fg_args.prime, fg_order);
    if (*seq) {
      seq_params.w = seq_w == "inf" ? Valuation::infinity() : Valuation(std::stol(seq_w));
      return cmd_seq(seq_which, seq_a, seq_l, seq_n, seq_params, seq_p, seq_m);
    }
    if (*verify) return cmd_verify(corpus, verify_n_max, serial, verify_json);
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
