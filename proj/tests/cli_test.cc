// Copyright 2026 The gamecap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.h"

namespace gamecap::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("gamecap_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static nlohmann::json load(const std::string& p) {
    return nlohmann::json::parse(slurp(p));
  }

  fs::path dir_;
};

TEST_F(CliTest, GameWinprob) {
  EXPECT_EQ(call({"game", "winprob", "chsh", "--class", "classical"}).out,
            "0.75\n");
  EXPECT_EQ(call({"game", "winprob", "magic-square", "--class", "classical"}).out,
            "0.888888888889\n");
  EXPECT_EQ(
      call({"game", "winprob", "parity", "--k", "5", "--class", "classical"}).out,
      "0.8125\n");
  EXPECT_EQ(call({"game", "winprob", "chsh", "--class", "pr"}).out, "1\n");
  EXPECT_EQ(call({"game", "winprob", "magic-square", "--class", "mermin-peres"})
                .out,
            "1\n");
}

TEST_F(CliTest, GameShow) {
  const auto r = call({"game", "show", "chsh"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("winning tuples: 8 of 16"), std::string::npos);
}

TEST_F(CliTest, GameShowFromSpecFile) {
  const std::string spec = path("g.json");
  std::ofstream(spec) << R"({"name": "tiny", "num_parties": 2,
    "question_sizes": [1, 1], "answer_sizes": [2, 2],
    "winning": [[[0, 0], [1, 1]]]})";
  const auto r = call({"game", "show", spec});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("winning tuples: 1 of 4"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"game", "show", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(call({"game", "winprob", "chsh", "--class", "magic"}).code,
            kExitUsage);
  EXPECT_EQ(call({"game", "winprob", "chsh", "--class", "ghz"}).code,
            kExitUsage);
  EXPECT_EQ(call({"game", "show", "parity"}).code, kExitUsage);
  EXPECT_EQ(call({"capacity", "gap", "chsh"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ChannelBuildAndValidate) {
  const std::string file = path("ch.json");
  const auto built = call({"channel", "build", "chsh", "--eta", "0.2", "--mode",
                           "per-receiver", "--out", file});
  ASSERT_EQ(built.code, kExitOk) << built.err;
  EXPECT_NE(built.out.find("h_w=0.468996"), std::string::npos) << built.out;
  const auto doc = load(file);
  EXPECT_TRUE(doc.contains("manifest"));
  EXPECT_EQ(doc["manifest"]["subcommand"], "channel build");

  const std::string csv = path("report.csv");
  const auto checked = call({"channel", "validate", file, "--csv", csv});
  EXPECT_EQ(checked.code, kExitOk);
  EXPECT_NE(slurp(csv).find("1,2,2,0.468995"), std::string::npos);
}

TEST_F(CliTest, GlobalModeFileValidates) {
  const std::string file = path("global.json");
  ASSERT_EQ(call({"channel", "build", "chsh", "--eta", "0.1", "--mode",
                  "global", "--out", file})
                .code,
            kExitOk);
  const auto r = call({"channel", "validate", file});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(call({"channel", "validate", file, "--identify", "per-receiver"})
                .code,
            kExitFailure);
}

TEST_F(CliTest, ChannelValidateFailsOnBadChannel) {
  const std::string file = path("flat.json");
  nlohmann::json doc = {{"num_tx", 2},
                        {"mode", "per-receiver"},
                        {"question_sizes", {2, 2}},
                        {"answer_sizes", {2, 2}},
                        {"output_sizes", {2, 2}},
                        {"probs", std::vector<double>(64, 0.25)}};
  std::ofstream(file) << doc.dump();
  const auto r = call({"channel", "validate", file, "--game", "chsh"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, InvalidEtaIsUsageError) {
  EXPECT_EQ(call({"channel", "build", "chsh", "--eta", "0.5", "--out",
                  path("x.json")})
                .code,
            kExitUsage);
}

TEST_F(CliTest, CapacityCommands) {
  const auto closed = call({"capacity", "closed-form", "chsh", "--eta", "0.2"});
  EXPECT_EQ(closed.out, "1.062009\n");
  const std::string out = path("gap.json");
  const auto gap = call(
      {"capacity", "gap", "chsh", "--eta", "0", "--seed", "3", "--out", out});
  ASSERT_EQ(gap.code, kExitOk) << gap.err;
  const auto doc = load(out);
  EXPECT_NEAR(doc["gap_bits"].get<double>(), 0.5178, 5e-4);
  EXPECT_EQ(doc["manifest"]["rng_seed"], 3);
  const auto gba = call({"capacity", "gba", "chsh", "--eta", "0", "--seed",
                         "3", "--starts", "5"});
  EXPECT_EQ(gba.out.substr(0, 5), "1.482");
}

TEST_F(CliTest, CapacityFromChannelFile) {
  const std::string file = path("ch.json");
  ASSERT_EQ(call({"channel", "build", "parity", "--k", "3", "--eta", "0.1",
                  "--out", file})
                .code,
            kExitOk);
  const auto a = call({"capacity", "closed-form", "parity", "--k", "3",
                       "--channel", file});
  const auto b =
      call({"capacity", "closed-form", "parity", "--k", "3", "--eta", "0.1"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, AutoSeedIsRecorded) {
  const std::string out = path("gba.json");
  const auto r = call({"capacity", "gba", "chsh", "--eta", "0.1", "--starts",
                       "2", "--out", out});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("using seed"), std::string::npos);
  EXPECT_TRUE(load(out)["manifest"]["rng_seed"].is_number_unsigned());
}

TEST_F(CliTest, SweepIsReproducible) {
  const std::string a = path("a.csv");
  const std::string b = path("b.csv");
  for (const auto& out : {a, b}) {
    ASSERT_EQ(call({"sweep", "chsh", "--eta-grid", "0:0.5:0.1", "--starts",
                    "4", "--seed", "11", "--out", out})
                  .code,
              kExitOk);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  std::istringstream lines(slurp(a));
  std::string header;
  std::string first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "eta,closed_form_bits,gba_bits,gap_bits,converged_starts");
  EXPECT_EQ(first.substr(0, 9), "0.000000,");
  EXPECT_TRUE(fs::exists(a + ".manifest.json"));
  EXPECT_EQ(call({"sweep", "chsh", "--eta-grid", "0.1,0.6", "--seed", "1",
                  "--out", path("c.csv")})
                .code,
            kExitUsage);
}

TEST_F(CliTest, SimulateDecompose) {
  const std::string out = path("dec.json");
  const auto r = call({"simulate", "decompose", "chsh", "--eta", "0.2", "--box",
                       "pr", "--samples", "100000", "--seed", "1", "--out",
                       out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = load(out);
  for (double tv : doc["tv_distances"]) EXPECT_LT(tv, 0.01);
  EXPECT_EQ(doc["winning_fraction"], 1.0);
}

TEST_F(CliTest, SimulateEndToEndNoiseless) {
  const auto r = call({"simulate", "e2e", "magic-square", "--eta", "0", "--box",
                       "mermin-peres", "--n", "8", "--trials", "500", "--seed",
                       "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("message error rate: 0\n"), std::string::npos);
}

TEST_F(CliTest, SimulateIsBitReproducible) {
  const std::string a = path("a.json");
  const std::string b = path("b.json");
  for (const auto& out : {a, b}) {
    ASSERT_EQ(call({"simulate", "e2e", "chsh", "--eta", "0.2", "--box", "pr",
                    "--n", "15", "--code", "repetition", "--messages", "2",
                    "--trials", "2000", "--seed", "5", "--out", out})
                  .code,
              kExitOk);
  }
  auto da = load(a);
  auto db = load(b);
  da["manifest"].erase("wall_clock_seconds");
  db["manifest"].erase("wall_clock_seconds");
  da["manifest"].erase("outputs");
  db["manifest"].erase("outputs");
  EXPECT_EQ(da, db);
}

TEST_F(CliTest, SimulateBoxErrors) {
  EXPECT_EQ(call({"simulate", "decompose", "magic-square", "--eta", "0.1",
                  "--seed", "1"})
                .code,
            kExitUsage);
  EXPECT_EQ(call({"simulate", "decompose", "magic-square", "--eta", "0.1",
                  "--box", "pr", "--seed", "1"})
                .code,
            kExitUsage);
  // The Tsirelson box does not win with certainty.
  EXPECT_EQ(call({"simulate", "decompose", "chsh", "--eta", "0.1", "--box",
                  "tsirelson", "--seed", "1"})
                .code,
            kExitFailure);
}

}  // namespace
}  // namespace gamecap::cli
