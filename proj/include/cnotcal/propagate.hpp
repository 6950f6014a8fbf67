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

// Time-evolution operators of the entangling (undriven) segments, in closed
// form for both rotating frames, plus a midpoint-rule integrator that serves
// as an independent check of the time-dependent frame.

#include <cmath>

#include "cnotcal/errors.hpp"
#include "cnotcal/model.hpp"
#include "cnotcal/qmat.hpp"

namespace cnotcal {

enum class Frame { Doubly = 1, PerQubit = 2 };

inline int frame_index(Frame f) { return static_cast<int>(f); }

inline Frame frame_from_index(int index) {
  if (index == 1) return Frame::Doubly;
  if (index == 2) return Frame::PerQubit;
  throw ContractViolation("frame must be 1 or 2");
}

/// Central-block amplitudes of the flip-flop propagator; |u|^2 + v^2 = 1.
struct UVPair {
  Complex u;
  double v = 0.0;
};

/// u = cos(L t/2) + (i delta/L) sin(L t/2), v = (2g/L) sin(L t/2) with
/// L = sqrt(delta^2 + 4 g^2).
inline UVPair uv_coefficients(double t, const SystemParams& p) {
  const double lambda = std::sqrt(p.delta * p.delta + 4.0 * p.g * p.g);
  const double half = 0.5 * lambda * t;
  return UVPair{Complex(std::cos(half), p.delta / lambda * std::sin(half)),
                2.0 * p.g / lambda * std::sin(half)};
}

namespace detail {
// exp(-t g_tilde ZZ) is diagonal: exp(-i t g_tilde/2 * (+1,-1,-1,+1)).
inline Eigen::Vector4cd zz_phases(double t, double g_tilde) {
  const Complex a = std::exp(-kI * (0.5 * t * g_tilde));
  const Complex b = std::conj(a);
  return Eigen::Vector4cd(a, b, b, a);
}
}  // namespace detail

/// U(t) = exp(-t(-delta Z2 + g(XX+YY) + g_tilde ZZ)) in the doubly rotating
/// frame. The drive is off during entangling segments; omega1 is ignored.
inline Operator4 entangling_u_frame1(double t, const SystemParams& p) {
  const UVPair uv = uv_coefficients(t, p);
  const Complex corner = std::exp(kI * (0.5 * p.delta * t));
  Operator4 m = Operator4::Zero();
  m(0, 0) = corner;
  m(3, 3) = std::conj(corner);
  m(1, 1) = uv.u;
  m(1, 2) = -kI * uv.v;
  m(2, 1) = -kI * uv.v;
  m(2, 2) = std::conj(uv.u);
  return detail::zz_phases(t, p.g_tilde).asDiagonal() * m;
}

/// Propagator of the slowly rotating flip-flop drive in the per-qubit frame:
/// corners stay 1, the central block is exp(-i delta t sz/2) times the
/// frame-1 block.
inline Operator4 entangling_u_frame2(double t, const SystemParams& p) {
  const UVPair uv = uv_coefficients(t, p);
  const Complex down = std::exp(-kI * (0.5 * p.delta * t));
  const Complex up = std::conj(down);
  Operator4 m = Operator4::Identity();
  m(1, 1) = uv.u * down;
  m(1, 2) = -kI * uv.v * down;
  m(2, 1) = -kI * uv.v * up;
  m(2, 2) = std::conj(uv.u) * up;
  return detail::zz_phases(t, p.g_tilde).asDiagonal() * m;
}

inline Operator4 entangling_u(Frame frame, double t, const SystemParams& p) {
  return frame == Frame::Doubly ? entangling_u_frame1(t, p) : entangling_u_frame2(t, p);
}

/// Time-ordered product of exp(-dt * h_rwa_frame2(p, t_mid)) over `steps`
/// uniform slices of [0, t]. Second order in dt.
inline Operator4 evolve_stepwise(const SystemParams& p, double t, int steps = 4096) {
  if (steps < 1) throw ContractViolation("evolve_stepwise: steps must be >= 1");
  const double dt = t / steps;
  Operator4 u = Operator4::Identity();
  for (int k = 0; k < steps; ++k) {
    const double mid = (k + 0.5) * dt;
    u = (expm_skew(-dt * h_rwa_frame2(p, mid)) * u).eval();
  }
  return u;
}

}  // namespace cnotcal
