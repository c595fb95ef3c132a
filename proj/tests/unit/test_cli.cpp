// Copyright 2026 The qbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbm/cli.hpp"
#include "qbm/formats.hpp"
#include "qbm/multiplier.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qbm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MultiplyThreeBySeven) {
  const auto r = run({"multiply", "--width", "4", "--x", "3", "--y", "7"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(r.out.rfind("21 (00010101)\nclean: yes", 0), 0u) << r.out;
}

TEST(Cli, MultiplyNegative) {
  const auto r = run({"multiply", "--width", "4", "--x", "-8", "--y", "-8"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(r.out.rfind("64 (01000000)\n", 0), 0u);
}

TEST(Cli, MultiplyOutOfRange) {
  const auto r = run({"multiply", "--width", "4", "--x", "8", "--y", "1"});
  EXPECT_EQ(r.code, qbm::cli::kRange);
  EXPECT_NE(r.err.find("range error"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, TraceThreeBySeven) {
  const auto r = run({"trace", "--width", "4", "--x", "3", "--y", "7"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_NE(r.out.find("0101  0100  1    0111  A <- A+M"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("product: 21 (00010101)"), std::string::npos);
}

TEST(Cli, RecodeSixteenBitChain) {
  const auto r = run({"recode", "--bits", "0010111011010010"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(r.out, "01N100N10N1N01N0\nvalue: 11986 (two's complement 11986, match)\n");
}

TEST(Cli, RecodeRejectsNonBinary) {
  EXPECT_EQ(run({"recode", "--bits", "01x"}).code, qbm::cli::kUsage);
}

TEST(Cli, BuildEncoderToStdoutParses) {
  const auto r = run({"build", "--width", "3", "--stage", "encoder"});
  ASSERT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(qbm::parse_qbc(r.out), qbm::build_booth_encoder(3).circuit);
}

TEST(Cli, BuildFullToFile) {
  const auto path = std::filesystem::temp_directory_path() / "qbm_cli_test_full.qasm";
  const auto r = run({"build", "--width", "2", "--format", "qasm3", "--out", path.string()});
  ASSERT_EQ(r.code, qbm::cli::kOk) << r.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), qbm::to_qasm3(qbm::build_qbm(2).circuit));
  std::filesystem::remove(path);
}

TEST(Cli, BuildUnwritablePath) {
  const auto r = run({"build", "--width", "2", "--out", "/nonexistent-dir/x.qbc"});
  EXPECT_EQ(r.code, qbm::cli::kIo);
}

TEST(Cli, VerifyExhaustive) {
  const auto r = run({"verify", "--width", "3"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(r.out, "width 3, exhaustive\n64/64 pass\n");
}

TEST(Cli, VerifyRandom) {
  const auto r = run({"verify", "--width", "6", "--random", "50", "--seed", "3", "--workers", "2"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(r.out, "width 6, 50 random pairs, seed 3\n50/50 pass\n");
}

TEST(Cli, VerifyBadWidths) {
  EXPECT_EQ(run({"verify", "--width", "0"}).code, qbm::cli::kUsage);
  EXPECT_EQ(run({"verify", "--width", "9"}).code, qbm::cli::kUsage);
}

TEST(Cli, StatsCsv) {
  const auto r = run({"stats", "--widths", "1..3", "--format", "csv"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(r.out, qbm::stats_csv(qbm::circuit_stats(1, 3)));
}

TEST(Cli, StatsSingleWidthText) {
  const auto r = run({"stats", "--widths", "2"});
  EXPECT_EQ(r.code, qbm::cli::kOk);
  EXPECT_EQ(r.out, qbm::stats_text(qbm::circuit_stats(2, 2)));
}

TEST(Cli, StatsBadRange) {
  EXPECT_EQ(run({"stats", "--widths", "5..2"}).code, qbm::cli::kUsage);
  EXPECT_EQ(run({"stats", "--widths", "a..b"}).code, qbm::cli::kUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, qbm::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, qbm::cli::kUsage);
  EXPECT_EQ(run({"multiply", "--width", "4"}).code, qbm::cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, qbm::cli::kOk);
}
