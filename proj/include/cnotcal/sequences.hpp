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

// Two-step and single-step CNOT control sequences.
//
//   two-step:    e^{i phi} R_post [U(t2) e^{-pi X1} U(t2)] R_pre
//   single-step: e^{i phi} R_post U(t1) R_pre,  U(t1) = exp(-t1 h_rwa_frame1)
//
// Local rotations are carried as z-y-z Euler triples per qubit and side,
// with Rz(a) = exp(-a Z) = exp(-i a sz/2) and likewise for Ry.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "cnotcal/equivclass.hpp"
#include "cnotcal/errors.hpp"
#include "cnotcal/model.hpp"
#include "cnotcal/nelder_mead.hpp"
#include "cnotcal/propagate.hpp"
#include "cnotcal/qmat.hpp"

namespace cnotcal {

/// Euler angles (a, b, c) of Rz(a) Ry(b) Rz(c).
using EulerZYZ = std::array<double, 3>;

inline Operator2 euler_zyz_matrix(const EulerZYZ& e) {
  const double cb = std::cos(0.5 * e[1]);
  const double sb = std::sin(0.5 * e[1]);
  const Complex sum = std::exp(-kI * (0.5 * (e[0] + e[2])));
  const Complex diff = std::exp(-kI * (0.5 * (e[0] - e[2])));
  Operator2 m;
  m << sum * cb, -diff * sb, std::conj(diff) * sb, std::conj(sum) * cb;
  return m;
}

/// Writes a U(2) matrix as exp(i phase) Rz(a) Ry(b) Rz(c).
inline std::pair<EulerZYZ, double> euler_zyz_from(const Operator2& u) {
  const Complex det = u.determinant();
  const double phase = 0.5 * std::arg(det);
  const Operator2 su = u * std::exp(-kI * phase);
  // su = [[p, -conj(q)], [q, conj(p)]]
  const Complex p = su(0, 0);
  const Complex q = su(1, 0);
  const double b = 2.0 * std::atan2(std::abs(q), std::abs(p));
  const double sum = std::abs(p) > 1e-14 ? -2.0 * std::arg(p) : 0.0;
  const double diff = std::abs(q) > 1e-14 ? 2.0 * std::arg(q) : 0.0;
  return {EulerZYZ{0.5 * (sum + diff), b, 0.5 * (sum - diff)}, phase};
}

/// Local pre- and post-rotations plus a global phase: 13 real parameters.
struct LocalRotationSpec {
  EulerZYZ post_q2{};
  EulerZYZ post_q1{};
  EulerZYZ pre_q2{};
  EulerZYZ pre_q1{};
  double global_phase = 0.0;

  static constexpr std::size_t kParameterCount = 13;

  Operator4 post() const { return kron2(euler_zyz_matrix(post_q2), euler_zyz_matrix(post_q1)); }
  Operator4 pre() const { return kron2(euler_zyz_matrix(pre_q2), euler_zyz_matrix(pre_q1)); }

  /// e^{i phi} R_post U R_pre.
  Operator4 dress(const Operator4& u) const {
    return std::exp(kI * global_phase) * post() * u * pre();
  }

  std::array<double, 13> to_array() const {
    return {post_q2[0], post_q2[1], post_q2[2], post_q1[0], post_q1[1], post_q1[2], pre_q2[0],
            pre_q2[1],  pre_q2[2],  pre_q1[0],  pre_q1[1],  pre_q1[2],  global_phase};
  }

  static LocalRotationSpec from_span(std::span<const double> x) {
    if (x.size() != kParameterCount) throw ContractViolation("LocalRotationSpec: need 13 parameters");
    return LocalRotationSpec{{x[0], x[1], x[2]},  {x[3], x[4], x[5]},   {x[6], x[7], x[8]},
                             {x[9], x[10], x[11]}, x[12]};
  }

  /// Decomposes arbitrary single-qubit factors into the Euler form; the
  /// factors' own phases are folded into the global phase.
  static LocalRotationSpec from_factors(const Operator2& post_q2, const Operator2& post_q1,
                                        const Operator2& pre_q2, const Operator2& pre_q1,
                                        double global_phase) {
    const auto [a, pa] = euler_zyz_from(post_q2);
    const auto [b, pb] = euler_zyz_from(post_q1);
    const auto [c, pc] = euler_zyz_from(pre_q2);
    const auto [d, pd] = euler_zyz_from(pre_q1);
    return LocalRotationSpec{a, b, c, d, global_phase + pa + pb + pc + pd};
  }
};

enum class SequenceKind { TwoStep, SingleStep };

inline std::string_view to_string(SequenceKind k) {
  return k == SequenceKind::TwoStep ? "two-step" : "single-step";
}

struct GateRecipe {
  SequenceKind kind = SequenceKind::TwoStep;
  SystemParams params;
  double t = 0.0;  ///< entangling time, units of 1/g
  LocalRotationSpec rotations;
};

/// |00>,|01> fixed, |10> <-> |11>: qubit 2 controls, qubit 1 is the target.
inline Operator4 canonical_cnot() {
  Operator4 m = Operator4::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

/// Entangling time of each of the two segments that makes
/// U(t) e^{-pi X1} U(t) a CNOT-class gate:
///   t2 = (pi - arccos(delta^2 / 4g^2)) / sqrt(delta^2 + 4 g^2).
inline double two_step_time(const SystemParams& p) {
  const double ratio = std::abs(p.delta) / p.g;
  if (ratio > 2.0) {
    throw DetuningOutOfRange("two-step CNOT requires |delta| <= 2g, got |delta|/g = " +
                             std::to_string(ratio));
  }
  const double arg = std::min(1.0, (p.delta * p.delta) / (4.0 * p.g * p.g));
  return (std::numbers::pi - std::acos(arg)) / std::sqrt(p.delta * p.delta + 4.0 * p.g * p.g);
}

/// e^{-pi X1} = -i (I x sx).
inline Operator4 pi_pulse_x1() { return expm_skew(-std::numbers::pi * generator(GeneratorName::X1)); }

/// U(t) e^{-pi X1} U(t) with the chosen frame's undriven propagator.
inline Operator4 two_step_entangler(double t, const SystemParams& p, Frame frame) {
  const Operator4 u = entangling_u(frame, t, p);
  return u * pi_pulse_x1() * u;
}

inline Operator4 assemble_two_step(const SystemParams& p, const LocalRotationSpec& rotations,
                                   Frame frame) {
  return rotations.dress(two_step_entangler(two_step_time(p), p, frame));
}

/// exp(-t(-delta Z2 + omega1 X1 + g(XX+YY))). Capacitive coupling only.
inline Operator4 single_step_u(double t, const SystemParams& p) {
  if (p.g_tilde != 0.0) {
    throw UnsupportedCoupling("single-step sequence requires g_tilde = 0 (capacitive coupling)");
  }
  return expm_skew(-t * h_rwa_frame1(p));
}

inline Operator4 assemble_single_step(double t, const SystemParams& p,
                                      const LocalRotationSpec& rotations) {
  return rotations.dress(single_step_u(t, p));
}

/// F = sqrt(1 - ||U - target||_F^2). Only meaningful close to the target.
inline double fidelity(const Operator4& u, const Operator4& target) {
  require_unitary(u, 1e-8, "fidelity");
  require_unitary(target, 1e-8, "fidelity");
  const double radicand = 1.0 - (u - target).squaredNorm();
  if (radicand < 0.0) throw FidelityUndefined(radicand);
  return std::sqrt(radicand);
}

/// exp(-theta (i/2) sigma), i.e. e^{-theta S} for S = (i/2) sigma.
inline Operator2 axis_rotation(const Operator2& sigma, double theta) {
  return std::cos(0.5 * theta) * Operator2::Identity() - kI * std::sin(0.5 * theta) * sigma;
}

/// R_post = e^{-(pi/2) Y2}, R_pre = e^{-(pi/2) Z2} e^{+(pi/2)(X2 + X1)},
/// phase pi/4: turns the resonant two-step product into the canonical CNOT.
inline LocalRotationSpec resonant_two_step_rotations() {
  constexpr double h = std::numbers::pi / 2;
  return LocalRotationSpec::from_factors(
      axis_rotation(pauli::y(), h), pauli::identity(),
      axis_rotation(pauli::z(), h) * axis_rotation(pauli::x(), -h), axis_rotation(pauli::x(), -h),
      std::numbers::pi / 4);
}

/// R_post = e^{-(pi/2) Y2}, R_pre = e^{-(pi/2) Z2} e^{+(pi/2)(X2 - X1)},
/// phase 5 pi/4: the resonant single-step gate at omega1 = sqrt(15) g,
/// t = pi/2g.
inline LocalRotationSpec resonant_single_step_rotations() {
  constexpr double h = std::numbers::pi / 2;
  return LocalRotationSpec::from_factors(
      axis_rotation(pauli::y(), h), pauli::identity(),
      axis_rotation(pauli::z(), h) * axis_rotation(pauli::x(), -h), axis_rotation(pauli::x(), h),
      5.0 * std::numbers::pi / 4);
}

struct FitOptions {
  int restarts = 32;
  std::uint64_t seed = 42;
  std::optional<LocalRotationSpec> warm_start;
  int max_iterations = 20000;
  int polish_rounds = 6;
};

struct RotationFit {
  LocalRotationSpec rotations;
  double distance = 0.0;             ///< ||e^{i phi} R_post U R_pre - target||_F
  std::optional<double> fidelity;    ///< empty when the radicand is negative
  int best_start = -1;               ///< -1 = warm start, else random restart index
  std::vector<double> best_so_far;   ///< best distance after each start
};

/// Searches the 13-parameter local dressing that brings U_ent closest to
/// `target` in Frobenius norm. Starts are evaluated in a fixed order and the
/// best is kept (ties go to the earlier start).
inline RotationFit fit_local_rotations(const Operator4& u_ent, const Operator4& target,
                                       const FitOptions& fit = {}) {
  require_unitary(u_ent, 1e-8, "fit_local_rotations");
  require_unitary(target, 1e-8, "fit_local_rotations");
  constexpr double two_pi = 2.0 * std::numbers::pi;

  const Objective objective = [&](std::span<const double> x) {
    return (LocalRotationSpec::from_span(x).dress(u_ent) - target).squaredNorm();
  };

  NMOptions nm;
  nm.max_iterations = fit.max_iterations;
  nm.x_tolerance = 1e-12;
  nm.f_tolerance = 1e-18;
  nm.bounds.assign(LocalRotationSpec::kParameterCount, Interval{-two_pi, two_pi});
  nm.seed = fit.seed;

  std::mt19937_64 rng(fit.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  RotationFit out;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  auto consider = [&](std::vector<double> x0, int index) {
    // Euler angles live in SU(2), where a 2 pi shift flips the sign.
    for (std::size_t i = 0; i + 1 < x0.size(); ++i) x0[i] = std::remainder(x0[i], 2.0 * two_pi);
    x0.back() = std::remainder(x0.back(), two_pi);
    const NMResult r = nelder_mead_polished(objective, std::move(x0), nm, fit.polish_rounds);
    if (r.f < best) {
      best = r.f;
      best_x = r.x;
      out.best_start = index;
    }
    out.best_so_far.push_back(std::sqrt(best));
  };

  if (fit.warm_start) {
    const auto a = fit.warm_start->to_array();
    consider(std::vector<double>(a.begin(), a.end()), -1);
  }
  for (int k = 0; k < fit.restarts; ++k) {
    std::vector<double> x0(LocalRotationSpec::kParameterCount);
    for (double& v : x0) v = angle(rng);
    consider(std::move(x0), k);
  }
  if (best_x.empty()) throw ContractViolation("fit_local_rotations: no starts requested");

  out.rotations = LocalRotationSpec::from_span(best_x);
  const Operator4 dressed = out.rotations.dress(u_ent);
  out.distance = frob_dist(dressed, target);
  const double radicand = 1.0 - out.distance * out.distance;
  if (radicand >= 0.0) out.fidelity = std::sqrt(radicand);
  return out;
}

}  // namespace cnotcal
