#pragma once

// Corpus ingestion and the per-entry verification suite.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ecval/engine.hpp"

namespace ecval {

using Json = nlohmann::ordered_json;

inline constexpr long kDefaultNMax = 40;
inline constexpr long kNMaxGuardrail = 200;

struct Expectation {
  std::string kodaira;
  int cv = 0;
  long mP = 0;
  std::string row;
};

struct CorpusEntry {
  CorpusEntry(long line_no, std::string name, WeierstrassModel e, CurvePoint P, long p)
      : line(line_no), label(std::move(name)), curve(std::move(e)), point(std::move(P)), prime(p) {}

  long line = 0;
  std::string label;
  WeierstrassModel curve;
  CurvePoint point;
  long prime = 0;
  std::optional<Expectation> expect;
};

/// A corpus line that cannot be used; carries its 1-based line number.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(long line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// One JSON object per line; blank lines and lines starting with '#' are
/// skipped. Off-curve points, torsion points and non-primes are rejected.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
CorpusEntry parse_corpus_line(const std::string& text, long line);
Json entry_to_json(const CorpusEntry& e);

struct Check {
  std::string criterion;  // "A1".."A8", or "profile"
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Mismatch {
  long n = 0;
  long formula = 0;
  Valuation direct;
};

struct EntryReport {
  long line = 0;
  std::string label;
  std::string row;
  bool untabulated = false;
  Json profile;
  long nMax = 0;
  std::vector<Mismatch> mismatches;
  std::vector<Check> checks;
  std::optional<std::string> error;

  bool ok() const;
};

/// Rows the bundled corpus is expected to hit.
const std::vector<std::string>& target_rows();
/// Distinct (a_P, m) pairs needed for the split I_m row.
inline constexpr int kSplitPairsNeeded = 3;

struct VerificationReport {
  std::vector<EntryReport> entries;
  std::vector<std::string> uncovered;

  long mismatch_count() const;
  long failed_check_count() const;
  long error_count() const;
  bool ok() const { return mismatch_count() == 0 && failed_check_count() == 0 && error_count() == 0; }
  Json to_json() const;
};

/// All checks for one entry with n in 1..nMax.
EntryReport verify_entry(const CorpusEntry& entry, long nMax);

/// Serial reference implementation.
VerificationReport verify_corpus_serial(const std::vector<CorpusEntry>& entries, long nMax);
/// OpenMP over entries; the result is identical to the serial version.
VerificationReport verify_corpus(const std::vector<CorpusEntry>& entries, long nMax);

Json profile_to_json(const ReductionProfile& prof);
Json tate_to_json(const TateResult& t);
std::string rational_list(const std::vector<Rational>& values);

}  // namespace ecval
