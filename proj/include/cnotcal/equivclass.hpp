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

// Local equivalence classes of two-qubit gates.
//
// Two gates are locally equivalent when they differ by single-qubit
// rotations on either side and a global phase. The class is captured by the
// Makhlin invariants (G1, G2) or, equivalently, by the Weyl chamber point
// c = (c1, c2, c3) such that U ~ exp(-c1 XX - c2 YY - c3 ZZ).
//
// Chamber convention: pi/2 >= c1 >= c2 >= |c3|, with c3 >= 0 whenever
// c1 = pi/2. A negative c3 distinguishes a class from its mirror image
// (G1 -> conj(G1)); the two-qubit gates produced by the sequences in this
// library all have c3 = 0.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "cnotcal/errors.hpp"
#include "cnotcal/model.hpp"
#include "cnotcal/qmat.hpp"

namespace cnotcal {

struct InvariantPair {
  Complex g1;
  double g2 = 0.0;
};

struct WeylPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

struct TrajectorySample {
  double t = 0.0;  ///< in units of 1/g
  WeylPoint point;
};

/// Columns are the magic (Bell) basis vectors. With this phase choice the
/// canonical CNOT has invariants exactly (0, 1) and
/// Q^dagger exp(-c.(XX,YY,ZZ)) Q is diagonal with entries
/// exp(-(i/2) s_k . c), s_k = (1,-1,1), (1,1,-1), (-1,-1,-1), (-1,1,1).
inline const Operator4& magic_basis() {
  static const Operator4 q = [] {
    Operator4 m;
    m << 1, 0, 0, kI,  //
        0, kI, 1, 0,   //
        0, kI, -1, 0,  //
        1, 0, 0, -kI;
    return Operator4(m / std::sqrt(2.0));
  }();
  return q;
}

namespace detail {
// m = U_B^T U_B with U_B the gate in the magic basis.
inline Operator4 magic_gram(const Operator4& u) {
  const Operator4& q = magic_basis();
  const Operator4 ub = q.adjoint() * u * q;
  return ub.transpose() * ub;
}
}  // namespace detail

/// Makhlin invariants, normalized by det U so that global phases drop out
/// and U(4) inputs are accepted:
///   G1 = tr^2(m) / (16 det U),  G2 = (tr^2(m) - tr(m^2)) / (4 det U).
inline InvariantPair makhlin_invariants(const Operator4& u) {
  require_unitary(u, 1e-8, "makhlin_invariants");
  const Operator4 m = detail::magic_gram(u);
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - (m * m).trace()) / (4.0 * det);
  if (std::abs(g2.imag()) > 1e-8) {
    throw ContractViolation("makhlin_invariants: G2 has a non-negligible imaginary part");
  }
  return InvariantPair{g1, g2.real()};
}

/// The invariants of U(t) e^{-pi X1} U(t) for the undriven entangling
/// propagator, in closed form. They depend on delta^2 only and not on the
/// ZZ coupling or the frame.
inline InvariantPair two_step_invariants_closed(double t, const SystemParams& p) {
  const double d2 = p.delta * p.delta;
  const double g2 = p.g * p.g;
  const double lam2 = d2 + 4.0 * g2;
  const double lam = std::sqrt(lam2);
  const double cos_half = std::cos(0.5 * lam * t);
  const double base = (d2 + 8.0 * g2 * cos_half * cos_half - 4.0 * g2) / lam2;
  const double inv2 = (3.0 * d2 * d2 + 8.0 * d2 * g2 * (1.0 + 2.0 * std::cos(t * lam)) +
                       16.0 * g2 * g2 * (2.0 + std::cos(2.0 * t * lam))) /
                      (lam2 * lam2);
  return InvariantPair{Complex(base * base, 0.0), inv2};
}

/// Squared distance of a class from the CNOT class (G1, G2) = (0, 1).
inline double cnot_distance(const InvariantPair& inv) {
  return std::norm(inv.g1) + (inv.g2 - 1.0) * (inv.g2 - 1.0);
}

/// exp(-c1 XX - c2 YY - c3 ZZ).
inline Operator4 canonical_gate(const WeylPoint& c) {
  using G = GeneratorName;
  return expm_skew(-c.c1 * generator(G::XX) - c.c2 * generator(G::YY) -
                   c.c3 * generator(G::ZZ));
}

/// Maps any coordinate triple into the chamber using the local symmetries:
/// shifts of a coordinate by pi, permutations, and sign flips of pairs.
inline WeylPoint canonicalize(const WeylPoint& in, double boundary_tol = 1e-9) {
  constexpr double pi = std::numbers::pi;
  std::array<double, 3> c{in.c1, in.c2, in.c3};
  for (double& x : c) x -= pi * std::round(x / pi);
  std::stable_sort(c.begin(), c.end(),
                   [](double a, double b) { return std::abs(a) > std::abs(b); });
  if (c[0] < 0) {
    c[0] = -c[0];
    c[2] = -c[2];
  }
  if (c[1] < 0) {
    c[1] = -c[1];
    c[2] = -c[2];
  }
  // On the c1 = pi/2 face, (pi/2, c2, c3) ~ (pi/2, c2, -c3).
  if (c[2] < 0 && std::abs(c[0] - pi / 2) < boundary_tol) c[2] = -c[2];
  return WeylPoint{c[0], c[1], c[2]};
}

/// Chamber coordinates of the class of U.
inline WeylPoint weyl_coordinates(const Operator4& u) {
  constexpr double pi = std::numbers::pi;
  require_unitary(u, 1e-8, "weyl_coordinates");
  const Operator4 su = u / std::pow(u.determinant(), 0.25);
  Eigen::ComplexEigenSolver<Operator4> eig(detail::magic_gram(su), false);

  std::array<double, 4> theta{};
  for (int k = 0; k < 4; ++k) theta[k] = std::arg(eig.eigenvalues()(k));
  std::sort(theta.begin(), theta.end(), std::greater<>());
  // det(m) = 1, so the phases sum to a multiple of 2 pi; bring it to zero.
  double sum = 0.0;
  for (double th : theta) sum += th;
  const long wraps = std::lround(sum / (2.0 * pi));
  for (long k = 0; k < wraps && k < 4; ++k) theta[k] -= 2.0 * pi;
  for (long k = 0; k < -wraps && k < 4; ++k) theta[3 - k] += 2.0 * pi;

  // theta_k = -s_k . c for the sign patterns of magic_basis().
  const WeylPoint raw{-(theta[0] + theta[1] - theta[2] - theta[3]) / 4.0,
                      -(-theta[0] + theta[1] - theta[2] + theta[3]) / 4.0,
                      -(theta[0] - theta[1] - theta[2] + theta[3]) / 4.0};
  return canonicalize(raw);
}

/// Weyl chamber path of the single-step propagator exp(-t h_rwa_frame1(p))
/// on a uniform grid t in [0, t_max]. Each sample is canonicalized on its
/// own; resolution, not branch tracking, keeps the curves smooth.
inline std::vector<TrajectorySample> weyl_trajectory(const SystemParams& p, double t_max,
                                                     int n_samples = 2048) {
  if (n_samples < 2) throw ContractViolation("weyl_trajectory: n_samples must be >= 2");
  const Generator4 h = h_rwa_frame1(p);
  std::vector<TrajectorySample> out(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double t = t_max * k / (n_samples - 1);
    out[static_cast<std::size_t>(k)] = {t, weyl_coordinates(expm_skew(-t * h))};
  }
  return out;
}

}  // namespace cnotcal
