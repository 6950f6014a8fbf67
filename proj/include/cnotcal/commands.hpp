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

#pragma once

// Implementations of the CLI subcommands. Each returns the text of the file
// it produces; writing it out is left to the caller.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cnotcal/calibrate.hpp"
#include "cnotcal/equivclass.hpp"
#include "cnotcal/errors.hpp"
#include "cnotcal/serialize.hpp"
#include "cnotcal/sequences.hpp"
#include "cnotcal/verify.hpp"

namespace cnotcal {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::string command;
  double delta_over_g = 0.0;
  SweepMode mode = SweepMode::OneStep;
  Frame frame = Frame::Doubly;
  int samples = 2048;
  std::string out;                    ///< empty: stdout
  std::optional<OutputFormat> format;  ///< empty: command default
  std::uint64_t seed = 42;
  bool with_resonant_trace = false;
};

struct CommandOutput {
  std::string text;
  std::optional<std::string> companion;  ///< resonant trace, when requested
};

namespace detail {
inline constexpr double kGridSlack = 1e-9;

inline Json calibration_json(const CalibrationResult& r) {
  Json j{{"delta_over_g", r.delta_over_g}, {"T", r.t_units},           {"omega1_over_g", r.omega1_over_g},
         {"G1", {r.invariants.g1.real(), r.invariants.g1.imag()}},     {"G2", r.invariants.g2},
         {"d2", r.distance},                {"converged", r.converged}};
  j["fidelity"] = r.fidelity ? Json(*r.fidelity) : Json(nullptr);
  return j;
}
}  // namespace detail

/// Two-step times over 0.0..2.0 and single-step parameters over 0.0..1.0;
/// single-step cells above 1.0 are left empty.
inline std::string cmd_table1(OutputFormat format = OutputFormat::Csv) {
  std::ostringstream os;
  Json rows = Json::array();
  if (format == OutputFormat::Csv) os << "delta_over_g,T2,T1,omega1_over_g\n";
  for (double d : detuning_grid(0.0, 2.0, 20)) {
    const CalibrationResult two = calibrate_two_step(d);
    std::optional<CalibrationResult> one;
    if (d <= 1.0 + detail::kGridSlack) one = calibrate_single_step(d);
    if (format == OutputFormat::Csv) {
      os << fixed6(d) << ',' << fixed6(two.t_units) << ',' << (one ? fixed6(one->t_units) : "") << ','
         << (one ? fixed6(one->omega1_over_g) : "") << '\n';
    } else {
      Json row{{"delta_over_g", d}, {"T2", two.t_units}};
      row["T1"] = one ? Json(one->t_units) : Json(nullptr);
      row["omega1_over_g"] = one ? Json(one->omega1_over_g) : Json(nullptr);
      rows.push_back(std::move(row));
    }
  }
  return format == OutputFormat::Csv ? os.str() : rows.dump(2) + "\n";
}

/// Single-step parameters of the classes closest to CNOT over 1.0..2.0.
inline std::string cmd_table2(OutputFormat format = OutputFormat::Csv) {
  std::ostringstream os;
  Json rows = Json::array();
  if (format == OutputFormat::Csv) os << "delta_over_g,T1,omega1_over_g,G1,G2\n";
  for (double d : detuning_grid(1.0, 2.0, 10)) {
    const CalibrationResult r = calibrate_single_step(d);
    if (format == OutputFormat::Csv) {
      os << fixed6(d) << ',' << fixed6(r.t_units) << ',' << fixed6(r.omega1_over_g) << ','
         << fixed6(r.invariants.g1.real()) << ',' << fixed6(r.invariants.g2) << '\n';
    } else {
      rows.push_back(detail::calibration_json(r));
    }
  }
  return format == OutputFormat::Csv ? os.str() : rows.dump(2) + "\n";
}

/// Full gate report: entangling propagator, fitted local rotations, the
/// assembled gate and its class and fidelity against the canonical CNOT.
inline Json gate_report(const RunConfig& cfg) {
  const Operator4 cnot = canonical_cnot();
  FitOptions fit;
  fit.seed = cfg.seed;

  GateRecipe recipe;
  Operator4 segment;
  Operator4 entangler;
  Json calibration;
  if (cfg.mode == SweepMode::TwoStep) {
    recipe.kind = SequenceKind::TwoStep;
    recipe.params = SystemParams::from_ratios(cfg.delta_over_g);
    recipe.t = two_step_time(recipe.params);
    segment = entangling_u(cfg.frame, recipe.t, recipe.params);
    entangler = two_step_entangler(recipe.t, recipe.params, cfg.frame);
    fit.warm_start = resonant_two_step_rotations();
    calibration = detail::calibration_json(calibrate_two_step(cfg.delta_over_g));
  } else {
    const CalibrationResult cal = calibrate_single_step(cfg.delta_over_g);
    recipe.kind = SequenceKind::SingleStep;
    recipe.params = SystemParams::from_ratios(cfg.delta_over_g, cal.omega1_over_g);
    recipe.t = cal.t_units * kSingleStepTimeUnit;
    segment = single_step_u(recipe.t, recipe.params);
    entangler = segment;
    fit.warm_start = resonant_single_step_rotations();
    calibration = detail::calibration_json(cal);
  }

  const RotationFit fitted = fit_local_rotations(entangler, cnot, fit);
  recipe.rotations = fitted.rotations;
  const Operator4 gate = fitted.rotations.dress(entangler);

  Json j;
  j["recipe"] = recipe_to_json(recipe);
  if (cfg.mode == SweepMode::TwoStep) j["frame"] = frame_index(cfg.frame);
  j["calibration"] = calibration;
  j["entangling_matrix"] = operator_to_json(segment);
  j["entangling_product"] = operator_to_json(entangler);
  j["assembled_gate"] = operator_to_json(gate);
  j["invariants"] = invariants_to_json(makhlin_invariants(entangler));
  j["weyl_point"] = weyl_to_json(weyl_coordinates(entangler));
  j["frobenius_distance"] = fitted.distance;
  j["fidelity"] = fitted.fidelity ? Json(*fitted.fidelity) : Json(nullptr);
  return j;
}

inline std::string cmd_gate(const RunConfig& cfg) {
  if (cfg.format.value_or(OutputFormat::Json) != OutputFormat::Json) {
    throw ContractViolation("gate output is JSON only");
  }
  return gate_report(cfg).dump(2) + "\n";
}

/// Single-step steering trajectory at the calibrated drive for the
/// configured detuning, optionally with the resonant trace over the same
/// time window.
inline CommandOutput cmd_trajectory(const RunConfig& cfg) {
  if (cfg.mode != SweepMode::OneStep) throw ContractViolation("trajectory is defined for the one-step mode");
  if (cfg.samples < 2) throw ContractViolation("trajectory needs at least 2 samples");
  if (cfg.format.value_or(OutputFormat::Csv) != OutputFormat::Csv) {
    throw ContractViolation("trajectory output is CSV only");
  }
  const CalibrationResult cal = calibrate_single_step(cfg.delta_over_g);
  const double t_max = cal.t_units * kSingleStepTimeUnit;
  CommandOutput out;
  out.text = trajectory_csv(
      weyl_trajectory(SystemParams::from_ratios(cfg.delta_over_g, cal.omega1_over_g), t_max, cfg.samples));
  if (cfg.with_resonant_trace) {
    const CalibrationResult res = calibrate_single_step(0.0);
    out.companion =
        trajectory_csv(weyl_trajectory(SystemParams::from_ratios(0.0, res.omega1_over_g), t_max, cfg.samples));
  }
  return out;
}

struct VerifyOutcome {
  std::string report;
  bool all_passed = true;
};

inline VerifyOutcome cmd_verify(std::uint64_t seed = 42) {
  VerifyOutcome v;
  std::ostringstream os;
  for (const PropertyCheck& c : run_property_suite(seed)) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-52s worst=%.3e tol=%.0e\n", c.passed() ? "PASS" : "FAIL",
                  c.name.c_str(), c.worst, c.tolerance);
    os << line;
    v.all_passed = v.all_passed && c.passed();
  }
  os << (v.all_passed ? "all properties hold\n" : "verification FAILED\n");
  v.report = os.str();
  return v;
}

}  // namespace cnotcal
