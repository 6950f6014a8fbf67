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

#include "cnotcal/calibrate.hpp"
#include "reference_values.hpp"

namespace cnotcal {
namespace {

TEST(CalibrateTwoStep, MatchesPublishedTable) {
  for (const auto& row : reference::kTableOne) {
    const CalibrationResult r = calibrate_two_step(row.delta);
    EXPECT_NEAR(r.t_units, row.t2, 1e-4) << row.delta;
    EXPECT_LT(r.distance, 1e-10) << row.delta;
    EXPECT_EQ(r.omega1_over_g, 0.0);
  }
}

TEST(CalibrateTwoStep, ZzCouplingLeavesTimeAndClassAlone) {
  const CalibrationResult a = calibrate_two_step(0.7);
  const CalibrationResult b = calibrate_two_step(0.7, 0.3);
  EXPECT_EQ(a.t_units, b.t_units);
  EXPECT_LT(b.distance, 1e-10);
}

TEST(CalibrateTwoStep, RejectsLargeDetuning) {
  EXPECT_THROW(calibrate_two_step(2.0001), DetuningOutOfRange);
}

TEST(CalibrateSingleStep, ResonantStartIsAlreadyOptimal) {
  const CalibrationResult r = calibrate_single_step(0.0);
  EXPECT_NEAR(r.t_units, 1.0, 1e-6);
  EXPECT_NEAR(r.omega1_over_g, std::sqrt(15.0), 1e-6);
  EXPECT_LT(r.distance, 1e-12);
}

TEST(CalibrateSingleStep, MatchesPublishedTableBelowCrossover) {
  for (const auto& row : reference::kTableOne) {
    if (row.t1 < 0) continue;
    const CalibrationResult r = calibrate_single_step(row.delta);
    EXPECT_NEAR(r.t_units, row.t1, 1e-3) << row.delta;
    EXPECT_NEAR(r.omega1_over_g, row.omega1, 1e-3) << row.delta;
    EXPECT_LT(r.distance, 1e-10) << row.delta;
  }
}

TEST(CalibrateSingleStep, MatchesPublishedTableAboveCrossover) {
  for (const auto& row : reference::kTableTwo) {
    const CalibrationResult r = calibrate_single_step(row.delta);
    EXPECT_NEAR(r.t_units, row.t1, 1e-3) << row.delta;
    EXPECT_NEAR(r.omega1_over_g, row.omega1, 1e-3) << row.delta;
    EXPECT_NEAR(std::abs(r.invariants.g1), row.g1, 1e-3) << row.delta;
    EXPECT_NEAR(r.invariants.g2, row.g2, 1e-3) << row.delta;
  }
}

TEST(CalibrateSingleStep, ExactClassOnlyUpToUnitDetuning) {
  EXPECT_LT(calibrate_single_step(0.95).distance, 1e-10);
  EXPECT_LT(calibrate_single_step(1.0).distance, 1e-10);
  EXPECT_GT(calibrate_single_step(1.05).distance, 1e-8);
  EXPECT_GT(calibrate_single_step(1.5).distance, 1e-3);
}

// d2 vanishes quadratically at the exact solutions, so the optimum is only
// resolved to about sqrt(eps) in (omega1, T1).
TEST(CalibrateSingleStep, SignOfDetuningDoesNotMatter) {
  for (double d : {0.3, 0.9, 1.4}) {
    const CalibrationResult plus = calibrate_single_step(d);
    const CalibrationResult minus = calibrate_single_step(-d);
    EXPECT_NEAR(plus.t_units, minus.t_units, 1e-6) << d;
    EXPECT_NEAR(plus.omega1_over_g, minus.omega1_over_g, 1e-6) << d;
    EXPECT_NEAR(plus.distance, minus.distance, 1e-12) << d;
  }
}

TEST(CalibrateSingleStep, DistanceAgreesWithObjective) {
  const CalibrationResult r = calibrate_single_step(1.3);
  EXPECT_EQ(r.distance, single_step_objective(1.3, r.omega1_over_g, r.t_units));
  EXPECT_EQ(r.distance, cnot_distance(r.invariants));
}

TEST(CalibrateSingleStep, Deterministic) {
  const CalibrationResult a = calibrate_single_step(1.7);
  const CalibrationResult b = calibrate_single_step(1.7);
  EXPECT_EQ(a.t_units, b.t_units);
  EXPECT_EQ(a.omega1_over_g, b.omega1_over_g);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Sweep, RecordsDomainErrorsAndCarriesOn) {
  const auto rows = sweep({1.9, 2.5, 0.0}, SweepMode::TwoStep);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].result.has_value());
  EXPECT_FALSE(rows[1].result.has_value());
  EXPECT_FALSE(rows[1].error.empty());
  EXPECT_TRUE(rows[2].result.has_value());
  EXPECT_EQ(rows[2].delta_over_g, 0.0);
}

TEST(DetuningGrid, EvenlySpacedAndClean) {
  const auto g = detuning_grid(0.0, 2.0, 20);
  ASSERT_EQ(g.size(), 21u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 2.0);
  EXPECT_EQ(g[3], 0.3);
  EXPECT_EQ(g[7], 0.7);
}

}  // namespace
}  // namespace cnotcal
