// Copyright 2026 The cnotcal Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cnotcal/cnotcal.hpp"
#include "reference_values.hpp"

#ifndef CNOTCAL_CLI_PATH
#error "CNOTCAL_CLI_PATH must point at the built cli"
#endif

namespace cnotcal {
namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

TEST(Fixed6, FormatsAndClearsNegativeZero) {
  EXPECT_EQ(fixed6(1.0383), "1.038300");
  EXPECT_EQ(fixed6(-0.0), "0.000000");
  EXPECT_EQ(fixed6(-1e-9), "0.000000");
  EXPECT_EQ(fixed6(-0.25), "-0.250000");
}

TEST(OperatorJson, RoundTripsExactly) {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 20; ++k) {
    const Operator4 u = expm_skew(random_generator(rng, 3.0));
    EXPECT_EQ(operator_from_json(Json::parse(operator_to_json(u).dump())), u);
  }
  EXPECT_THROW(operator_from_json(Json::array({1, 2, 3})), ContractViolation);
}

TEST(RecipeJson, RoundTripRealizesTheSameGate) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  for (int k = 0; k < 20; ++k) {
    GateRecipe r;
    r.kind = k % 2 == 0 ? SequenceKind::TwoStep : SequenceKind::SingleStep;
    r.params = SystemParams::from_ratios(0.1 * k - 1.0, r.kind == SequenceKind::SingleStep ? 3.0 + 0.05 * k : 0.0);
    r.t = r.kind == SequenceKind::TwoStep ? two_step_time(r.params) : 1.1 * kSingleStepTimeUnit;
    std::vector<double> x(LocalRotationSpec::kParameterCount);
    for (double& v : x) v = a(rng);
    r.rotations = LocalRotationSpec::from_span(x);

    const Json j = recipe_to_json(r);
    EXPECT_EQ(j.at("t_units"), r.kind == SequenceKind::TwoStep ? "pi/4g" : "pi/2g");
    EXPECT_EQ(j.at("euler_angles").size(), 12u);
    const GateRecipe back = recipe_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.kind, r.kind);
    EXPECT_LT(frob_dist(realize(back), realize(r)), 1e-12);
  }
}

TEST(RecipeJson, RejectsMismatchedUnits) {
  GateRecipe r;
  Json j = recipe_to_json(r);
  j["t_units"] = "pi/2g";
  EXPECT_THROW(recipe_from_json(j), ContractViolation);
  j = recipe_to_json(r);
  j["kind"] = "three-step";
  EXPECT_THROW(recipe_from_json(j), ContractViolation);
}

TEST(CalibrationCsv, RowMatchesHeader) {
  const CalibrationResult r = calibrate_two_step(0.5);
  EXPECT_EQ(fields_of(calibration_csv_row(r)).size(), fields_of(kCalibrationCsvHeader).size());
}

TEST(Table1, ReproducesPublishedColumns) {
  const auto lines = lines_of(cmd_table1());
  ASSERT_EQ(lines.size(), 22u);
  EXPECT_EQ(lines[0], "delta_over_g,T2,T1,omega1_over_g");
  for (std::size_t k = 0; k < reference::kTableOne.size(); ++k) {
    const auto& ref = reference::kTableOne[k];
    const auto f = fields_of(lines[k + 1]);
    ASSERT_EQ(f.size(), 4u) << lines[k + 1];
    EXPECT_NEAR(std::stod(f[0]), ref.delta, 1e-12);
    EXPECT_NEAR(std::stod(f[1]), ref.t2, 1e-4);
    if (ref.t1 < 0) {
      EXPECT_TRUE(f[2].empty());
      EXPECT_TRUE(f[3].empty());
    } else {
      EXPECT_NEAR(std::stod(f[2]), ref.t1, 1e-3);
      EXPECT_NEAR(std::stod(f[3]), ref.omega1, 1e-3);
    }
  }
}

TEST(Table2, ReproducesPublishedColumns) {
  const auto lines = lines_of(cmd_table2());
  ASSERT_EQ(lines.size(), 12u);
  for (std::size_t k = 0; k < reference::kTableTwo.size(); ++k) {
    const auto& ref = reference::kTableTwo[k];
    const auto f = fields_of(lines[k + 1]);
    ASSERT_EQ(f.size(), 5u);
    EXPECT_NEAR(std::stod(f[1]), ref.t1, 1e-3);
    EXPECT_NEAR(std::stod(f[2]), ref.omega1, 1e-3);
    EXPECT_NEAR(std::stod(f[3]), ref.g1, 1e-3);
    EXPECT_NEAR(std::stod(f[4]), ref.g2, 1e-3);
  }
  const Json j = Json::parse(cmd_table2(OutputFormat::Json));
  EXPECT_EQ(j.size(), 11u);
}

TEST(GateReport, UnitDetuningTwoStepFrame2) {
  RunConfig cfg;
  cfg.delta_over_g = 1.0;
  cfg.mode = SweepMode::TwoStep;
  cfg.frame = Frame::PerQubit;
  const Json j = gate_report(cfg);
  EXPECT_EQ(j.at("frame"), 2);
  EXPECT_LT((operator_from_json(j.at("entangling_matrix")) - reference::two_step_segment_frame2()).cwiseAbs().maxCoeff(),
            1e-3);
  EXPECT_LT(1.0 - j.at("fidelity").get<double>(), 1e-6);
  EXPECT_LT(frob_dist(operator_from_json(j.at("assembled_gate")), canonical_cnot()), 1e-3);
  const GateRecipe r = recipe_from_json(j.at("recipe"));
  EXPECT_EQ(r.kind, SequenceKind::TwoStep);
}

TEST(GateReport, LargeDetuningSingleStep) {
  RunConfig cfg;
  cfg.delta_over_g = 1.5;
  const Json j = gate_report(cfg);
  EXPECT_FALSE(j.contains("frame"));
  EXPECT_NEAR(j.at("fidelity").get<double>(), reference::kFidelityAtOnePointFive, 1e-3);
  EXPECT_NEAR(j.at("invariants").at("G2").get<double>(), 0.9898, 1e-3);
  RunConfig csv = cfg;
  csv.format = OutputFormat::Csv;
  EXPECT_THROW(cmd_gate(csv), ContractViolation);
}

TEST(Trajectory, EndsAtCnotForUnitDetuning) {
  RunConfig cfg;
  cfg.delta_over_g = 1.0;
  cfg.samples = 65;
  cfg.with_resonant_trace = true;
  const CommandOutput out = cmd_trajectory(cfg);
  const auto lines = lines_of(out.text);
  ASSERT_EQ(lines.size(), 66u);
  EXPECT_EQ(lines[0], "t,c1,c2,c3");
  EXPECT_EQ(lines[1], "0.000000,0.000000,0.000000,0.000000");
  const auto last = fields_of(lines.back());
  EXPECT_NEAR(std::stod(last[0]), 1.2753, 1e-3);
  EXPECT_NEAR(std::stod(last[1]), 1.0, 2e-3);
  EXPECT_NEAR(std::stod(last[2]), 0.0, 2e-3);
  EXPECT_NEAR(std::stod(last[3]), 0.0, 2e-3);
  ASSERT_TRUE(out.companion.has_value());
  EXPECT_EQ(lines_of(*out.companion).size(), 66u);
  EXPECT_EQ(fields_of(lines_of(*out.companion).back())[0], last[0]);
}

TEST(Trajectory, RejectsTwoStepMode) {
  RunConfig cfg;
  cfg.mode = SweepMode::TwoStep;
  EXPECT_THROW(cmd_trajectory(cfg), ContractViolation);
}

TEST(Verify, AllPropertiesHold) {
  const VerifyOutcome v = cmd_verify();
  EXPECT_TRUE(v.all_passed) << v.report;
  EXPECT_EQ(lines_of(v.report).size(), run_property_suite().size() + 1);
}

// End-to-end runs of the installed command.

struct Cli : ::testing::Test {
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("cnotcal_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  int run(const std::string& args) {
    const std::string cmd = std::string("\"") + CNOTCAL_CLI_PATH + "\" " + args + " 2>\"" +
                            (dir / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
};

TEST_F(Cli, Table1IsByteIdenticalAcrossRuns) {
  ASSERT_EQ(run("table1 --out \"" + (dir / "a.csv").string() + "\""), 0);
  ASSERT_EQ(run("table1 --out \"" + (dir / "b.csv").string() + "\""), 0);
  const std::string a = slurp(dir / "a.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir / "b.csv"));
  EXPECT_EQ(a, cmd_table1());
}

TEST_F(Cli, GateIsByteIdenticalAcrossRuns) {
  const std::string args = "gate --delta 1.5 --mode one-step --seed 7 --out ";
  ASSERT_EQ(run(args + "\"" + (dir / "a.json").string() + "\""), 0);
  ASSERT_EQ(run(args + "\"" + (dir / "b.json").string() + "\""), 0);
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
}

TEST_F(Cli, TrajectoryWritesCompanionFile) {
  ASSERT_EQ(run("trajectory --delta 1.0 --samples 33 --with-resonant-trace --out \"" +
                (dir / "traj.csv").string() + "\""),
            0);
  EXPECT_TRUE(fs::exists(dir / "traj.csv"));
  EXPECT_TRUE(fs::exists(dir / "traj_resonant.csv"));
}

TEST_F(Cli, DomainErrorsExitWithTwo) {
  EXPECT_EQ(run("gate --delta 2.5 --mode two-step --out \"" + (dir / "g.json").string() + "\""), 2);
  EXPECT_FALSE(slurp(dir / "stderr.txt").empty());
  EXPECT_EQ(run("trajectory --delta 1.0 --mode two-step --out \"" + (dir / "t.csv").string() + "\""), 2);
}

TEST_F(Cli, UnwritableOutputExitsWithThree) {
  EXPECT_EQ(run("table2 --out \"" + (dir / "missing" / "t.csv").string() + "\""), 3);
}

TEST_F(Cli, VerifySucceeds) {
  EXPECT_EQ(run("verify --out \"" + (dir / "v.txt").string() + "\""), 0);
  EXPECT_NE(slurp(dir / "v.txt").find("all properties hold"), std::string::npos);
}

}  // namespace
}  // namespace cnotcal
