#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace ecval;

namespace {

std::vector<CorpusEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

long error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const CorpusError& e) {
    return e.line();
  }
  return -1;
}

std::vector<CorpusEntry> bundled() {
  std::ifstream in(ECVAL_CORPUS_PATH);
  return parse_corpus(in);
}

}  // namespace

TEST(CorpusParsing, SkipsCommentsAndBlankLines) {
  const auto entries = parse(
      "# header\n"
      "\n"
      R"({"label":"a","a":["0","0","0","0","-2"],"point":["3","5"],"prime":5})"
      "\n");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].line, 3);
  EXPECT_FALSE(entries[0].expect.has_value());
}

TEST(CorpusParsing, ErrorsCarryLineNumbers) {
  const std::string good = R"({"label":"a","a":["0","0","0","0","-2"],"point":["3","5"],"prime":5})";
  EXPECT_EQ(error_line(good + "\n" + R"({"label":"b","a":["0","0","0","0","-2"],"point":["3","6"],"prime":5})"), 2);
  EXPECT_EQ(error_line("# c\n" + good + "\nnot json\n"), 3);
  EXPECT_EQ(error_line(R"({"label":"t","a":["0","0","0","0","1"],"point":["2","3"],"prime":2})"), 1);
  EXPECT_EQ(error_line(R"({"label":"np","a":["0","0","0","0","-2"],"point":["3","5"],"prime":9})"), 1);
  EXPECT_EQ(error_line(R"({"label":"num","a":[0,0,0,0,-2],"point":["3","5"],"prime":5})"), 1);
  EXPECT_EQ(error_line(R"({"a":["0","0","0","0","-2"],"point":["3","5"]})"), 1);
}

TEST(CorpusParsing, RoundTrip) {
  for (const auto& e : bundled()) {
    const auto again = parse_corpus_line(entry_to_json(e).dump(), e.line);
    EXPECT_EQ(again.curve, e.curve);
    EXPECT_EQ(again.point, e.point);
    EXPECT_EQ(again.prime, e.prime);
    ASSERT_TRUE(again.expect.has_value());
    EXPECT_EQ(again.expect->row, e.expect->row);
  }
}

TEST(Verification, EmptyCorpusWarns) {
  const auto report = verify_corpus({}, kDefaultNMax);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.to_json()["warning"], "0 entries");
  EXPECT_FALSE(report.uncovered.empty());
}

TEST(Verification, WrongExpectationIsReported) {
  auto e = parse(R"({"label":"x","a":["0","0","0","0","-2"],"point":["3","5"],"prime":5,)"
                 R"("expect":{"kodaira":"I0","cv":1,"mP":1,"row":"non-singular v(x)<0"}})")[0];
  const auto r = verify_entry(e, 10);
  EXPECT_FALSE(r.ok());
  e.expect->row = row::kNonSingNonNegX;
  EXPECT_TRUE(verify_entry(e, 10).ok());
}

TEST(Verification, BundledCorpusCoversTargetRows) {
  const auto entries = bundled();
  EXPECT_GE(entries.size(), 14u);
  for (const auto& e : entries) EXPECT_TRUE(e.expect.has_value()) << e.line;
  const auto report = verify_corpus(entries, 8);
  EXPECT_TRUE(report.uncovered.empty());
}

// The OpenMP path and the serial reference produce byte-identical reports.
TEST(Parallel, MatchesSerialReference) {
  const auto entries = bundled();
  const auto serial = verify_corpus_serial(entries, 20).to_json().dump();
  const auto parallel = verify_corpus(entries, 20).to_json().dump();
  EXPECT_EQ(serial, parallel);
}
