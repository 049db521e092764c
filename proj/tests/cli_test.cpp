#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "support.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(ECVAL_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ProfileGoodReduction) {
  const CliRun r = run("profile --curve 0,0,0,0,1 --prime 5");
  EXPECT_EQ(r.code, 0);
  const auto j = ecval::Json::parse(r.out);
  EXPECT_EQ(j["tate"]["kodaira"], "I0");
  EXPECT_EQ(j["tate"]["cv"], 1);
}

TEST(Cli, ProfileMultiplicative) {
  const CliRun r = run("profile --curve 0,1,0,-2,0 --prime 3");
  EXPECT_EQ(r.code, 0);
  const auto j = ecval::Json::parse(r.out);
  EXPECT_EQ(j["tate"]["kodaira"], "I2");
  EXPECT_EQ(j["tate"]["reduction"], "multiplicative");
}

TEST(Cli, ProfileTorsionPointAcceptedButRefused) {
  const CliRun r = run("profile --curve 0,0,0,0,1 --prime 2 --point 2,3");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("\"onCurve\": true"), std::string::npos) << r.out;
}

TEST(Cli, ProfileExitCodes) {
  EXPECT_EQ(run("profile --curve 0,0,0,0,1 --prime 2 --point 1,1").code, 2);
  EXPECT_EQ(run("profile --curve 0,0,0 --prime 2").code, 2);
  EXPECT_EQ(run("profile --curve 1,0,0,0,0 --prime 2").code, 3);
  EXPECT_EQ(run("profile --curve 0,0,0,0,1 --prime 9").code, 3);
  EXPECT_EQ(run("profile --curve 0,0,0,0,1").code, 2);
}

TEST(Cli, KvalBothModes) {
  const CliRun r = run("kval --curve 1,2,2,1,3 --point 0,1 --prime 2 --n-max 5");
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  long n = 0;
  while (std::getline(lines, line)) {
    const auto j = ecval::Json::parse(line);
    ++n;
    EXPECT_EQ(j["n"], n);
    EXPECT_EQ(j["match"], true);
    if (n == 3) EXPECT_EQ(j["kFormula"], 10);
    if (n == 1) EXPECT_EQ(j["kDirect"], 0);
  }
  EXPECT_EQ(n, 5);
}

TEST(Cli, NMaxGuardrail) {
  EXPECT_EQ(run("kval --curve 1,2,2,1,3 --point 0,1 --prime 2 --n-max 201").code, 2);
  EXPECT_EQ(run("psi --curve 1,2,2,1,3 --point 0,1 --prime 2 --n-max 0").code, 2);
}

TEST(Cli, PsiAndFormalGroup) {
  const CliRun psi = run("psi --curve 0,0,0,0,-2 --point 3,5 --prime 5 --n-max 3");
  EXPECT_EQ(psi.code, 0);
  EXPECT_NE(psi.out.find("\"psi\":\"10\""), std::string::npos) << psi.out;
  const CliRun fg = run("formal-group --curve 0,0,0,0,-2 --prime 7 --json");
  EXPECT_EQ(fg.code, 0);
  const auto j = ecval::Json::parse(fg.out);
  EXPECT_EQ(j["b"], 7);
  EXPECT_EQ(j["coefficients"][0]["c"], "7");
}

TEST(Cli, HiddenSeq) {
  EXPECT_NE(run("seq rn --a 2 --l 5 --n 3").out.find("\"R\":5"), std::string::npos);
  EXPECT_NE(run("seq sn --b 2 --height 0 --s 1 --w 3 --prime 2 --m 2").out.find("\"S\":5"), std::string::npos);
  EXPECT_EQ(run("--help").out.find("seq"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run(std::string("verify --corpus ") + ECVAL_CORPUS_PATH).code, 0);

  const CliRun empty = run("verify --corpus " + write_temp("empty.jsonl", "# nothing\n"));
  EXPECT_EQ(empty.code, 0);
  EXPECT_NE(empty.out.find("0 entries"), std::string::npos);

  const CliRun bad = run("verify --corpus " +
                      write_temp("bad.jsonl", "# c\n{\"label\":\"x\",\"a\":[\"0\",\"0\",\"0\",\"0\",\"-2\"],"
                                              "\"point\":[\"3\",\"6\"],\"prime\":5}\n"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("line 2"), std::string::npos) << bad.out;

  const CliRun wrong = run("verify --corpus " +
                        write_temp("wrong.jsonl", "{\"label\":\"x\",\"a\":[\"0\",\"0\",\"0\",\"0\",\"-2\"],"
                                                  "\"point\":[\"3\",\"5\"],\"prime\":5,\"expect\":{\"kodaira\":"
                                                  "\"I1\",\"cv\":1,\"mP\":1,\"row\":\"III\"}}\n"));
  EXPECT_EQ(wrong.code, 1);
}
