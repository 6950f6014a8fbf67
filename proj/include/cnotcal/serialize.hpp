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

// JSON and CSV encodings of gates, recipes, calibration rows and
// trajectories. CSV numbers are fixed-point with 6 decimals.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cnotcal/calibrate.hpp"
#include "cnotcal/equivclass.hpp"
#include "cnotcal/errors.hpp"
#include "cnotcal/sequences.hpp"

namespace cnotcal {

using Json = nlohmann::json;

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline Json operator_to_json(const Operator4& m) {
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Operator4 operator_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ContractViolation("operator JSON must be a 4x4 array");
  Operator4 m;
  for (int r = 0; r < 4; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || row.size() != 4) throw ContractViolation("operator JSON must be a 4x4 array");
    for (int c = 0; c < 4; ++c) {
      const Json& e = row.at(static_cast<std::size_t>(c));
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

inline double recipe_time_unit(SequenceKind kind) {
  return kind == SequenceKind::TwoStep ? kTwoStepTimeUnit : kSingleStepTimeUnit;
}

/// {kind, delta_over_g, gtilde_over_g, omega1_over_g, t_units, t_value,
///  euler_angles[12], global_phase}; t_value is the entangling time in
/// multiples of t_units ("pi/4g" or "pi/2g").
inline Json recipe_to_json(const GateRecipe& r) {
  const auto a = r.rotations.to_array();
  const double g = r.params.g;
  return Json{{"kind", std::string(to_string(r.kind))},
              {"delta_over_g", r.params.delta / g},
              {"gtilde_over_g", r.params.g_tilde / g},
              {"omega1_over_g", r.params.omega1 / g},
              {"t_units", r.kind == SequenceKind::TwoStep ? "pi/4g" : "pi/2g"},
              {"t_value", r.t * g / recipe_time_unit(r.kind)},
              {"euler_angles", std::vector<double>(a.begin(), a.begin() + 12)},
              {"global_phase", r.rotations.global_phase}};
}

inline GateRecipe recipe_from_json(const Json& j) {
  GateRecipe r;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "two-step") {
    r.kind = SequenceKind::TwoStep;
  } else if (kind == "single-step") {
    r.kind = SequenceKind::SingleStep;
  } else {
    throw ContractViolation("unknown recipe kind: " + kind);
  }
  r.params = SystemParams::from_ratios(j.at("delta_over_g").get<double>(),
                                       j.at("omega1_over_g").get<double>(),
                                       j.at("gtilde_over_g").get<double>());
  const std::string units = j.at("t_units").get<std::string>();
  const std::string expected = r.kind == SequenceKind::TwoStep ? "pi/4g" : "pi/2g";
  if (units != expected) throw ContractViolation("t_units must be " + expected + " for " + kind);
  r.t = j.at("t_value").get<double>() * recipe_time_unit(r.kind);
  const auto angles = j.at("euler_angles").get<std::vector<double>>();
  if (angles.size() != 12) throw ContractViolation("euler_angles must have 12 entries");
  std::vector<double> x(angles);
  x.push_back(j.at("global_phase").get<double>());
  r.rotations = LocalRotationSpec::from_span(x);
  return r;
}

/// The gate a recipe realizes (frame 1 for the two-step sequence).
inline Operator4 realize(const GateRecipe& r) {
  if (r.kind == SequenceKind::TwoStep) return r.rotations.dress(two_step_entangler(r.t, r.params, Frame::Doubly));
  return assemble_single_step(r.t, r.params, r.rotations);
}

inline constexpr const char* kCalibrationCsvHeader =
    "delta_over_g,T,omega1_over_g,G1_re,G1_im,G2,d2,fidelity,converged";

inline std::string calibration_csv_row(const CalibrationResult& r) {
  std::ostringstream os;
  os << fixed6(r.delta_over_g) << ',' << fixed6(r.t_units) << ',' << fixed6(r.omega1_over_g) << ','
     << fixed6(r.invariants.g1.real()) << ',' << fixed6(r.invariants.g1.imag()) << ','
     << fixed6(r.invariants.g2) << ',' << fixed6(r.distance) << ','
     << (r.fidelity ? fixed6(*r.fidelity) : std::string()) << ',' << (r.converged ? "true" : "false");
  return os.str();
}

/// Trajectory CSV: t in units of pi/2g, coordinates in units of pi/2.
inline std::string trajectory_csv(const std::vector<TrajectorySample>& samples, double g = 1.0) {
  constexpr double half_pi = std::numbers::pi / 2;
  std::ostringstream os;
  os << "t,c1,c2,c3\n";
  for (const TrajectorySample& s : samples) {
    os << fixed6(s.t * g / half_pi) << ',' << fixed6(s.point.c1 / half_pi) << ','
       << fixed6(s.point.c2 / half_pi) << ',' << fixed6(s.point.c3 / half_pi) << '\n';
  }
  return os.str();
}

inline Json invariants_to_json(const InvariantPair& inv) {
  return Json{{"G1", {inv.g1.real(), inv.g1.imag()}}, {"G2", inv.g2}};
}

inline Json weyl_to_json(const WeylPoint& c) {
  return Json{{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}};
}

}  // namespace cnotcal
