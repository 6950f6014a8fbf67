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

// Randomized property checks over the whole model: unitarity, frame
// equivalence, ZZ independence, local invariance and Weyl round trips.
// Each check reports the worst deviation it observed against a fixed
// tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cnotcal/calibrate.hpp"
#include "cnotcal/equivclass.hpp"
#include "cnotcal/model.hpp"
#include "cnotcal/propagate.hpp"
#include "cnotcal/sequences.hpp"

namespace cnotcal {

struct PropertyCheck {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed() const { return worst <= tolerance; }
};

inline double invariant_gap(const InvariantPair& a, const InvariantPair& b) {
  return std::max(std::abs(a.g1 - b.g1), std::abs(a.g2 - b.g2));
}

inline double weyl_gap(const WeylPoint& a, const WeylPoint& b) {
  return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2), std::abs(a.c3 - b.c3)});
}

/// Random skew-Hermitian generator with Frobenius norm `scale`.
inline Generator4 random_generator(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator4 a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = Complex(n(rng), n(rng));
  Operator4 skew = 0.5 * (a - a.adjoint());
  skew *= scale / skew.norm();
  return Generator4(skew);
}

inline Operator2 random_su2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  return euler_zyz_matrix({angle(rng), angle(rng), angle(rng)});
}

/// e^{i phi} (A2 x A1) U (B2 x B1) for random single-qubit factors.
inline Operator4 random_local_dressing(const Operator4& u, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  return std::exp(kI * phase(rng)) * kron2(random_su2(rng), random_su2(rng)) * u *
         kron2(random_su2(rng), random_su2(rng));
}

/// A point at least `margin` away from every chamber face.
inline WeylPoint random_interior_weyl_point(std::mt19937_64& rng, double margin = 1e-3) {
  std::uniform_real_distribution<double> c1d(0.0, std::numbers::pi / 2);
  for (;;) {
    const double c1 = c1d(rng);
    const double c2 = std::uniform_real_distribution<double>(0.0, c1)(rng);
    const double c3 = std::uniform_real_distribution<double>(-c2, c2)(rng);
    const bool interior = std::numbers::pi / 2 - c1 > margin && c1 - c2 > margin &&
                          c2 - std::abs(c3) > margin;
    if (interior) return {c1, c2, c3};
  }
}

inline std::vector<PropertyCheck> run_property_suite(std::uint64_t seed = 42, int samples = 100) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PropertyCheck> out;
  auto check = [&](std::string name, double tol, const std::function<double()>& body) {
    out.push_back(PropertyCheck{std::move(name), body(), tol});
  };

  check("unitarity of propagators", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const SystemParams p = SystemParams::from_ratios(3.0 * unit(rng), 5.0 * unit(rng), 0.1 * unit(rng));
      const double t = 4.0 * unit(rng);
      worst = std::max({worst, unitarity_defect(expm_skew(random_generator(rng, 10.0 * unit(rng)))),
                        unitarity_defect(entangling_u_frame1(t, p)),
                        unitarity_defect(entangling_u_frame2(t, p)),
                        unitarity_defect(expm_skew(-t * h_rwa_frame1(p)))});
    }
    return worst;
  });

  check("|u|^2 + v^2 = 1", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const UVPair uv = uv_coefficients(10.0 * unit(rng), SystemParams::from_ratios(6.0 * unit(rng) - 3.0));
      worst = std::max(worst, std::abs(std::norm(uv.u) + uv.v * uv.v - 1.0));
    }
    return worst;
  });

  check("frame-1 / frame-2 invariant equality", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const SystemParams p = SystemParams::from_ratios(3.0 * unit(rng));
      const double t = 2.0 * std::numbers::pi * unit(rng);
      worst = std::max(worst, invariant_gap(makhlin_invariants(two_step_entangler(t, p, Frame::Doubly)),
                                            makhlin_invariants(two_step_entangler(t, p, Frame::PerQubit))));
    }
    return worst;
  });

  check("ZZ-coupling independence of invariants", 1e-9, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const double delta = 3.0 * unit(rng);
      const double t = 2.0 * std::numbers::pi * unit(rng);
      const InvariantPair closed = two_step_invariants_closed(t, SystemParams::from_ratios(delta));
      for (double gt : {0.0, 0.05, 0.1, 0.1 * unit(rng)}) {
        const SystemParams p = SystemParams::from_ratios(delta, 0.0, gt);
        for (Frame f : {Frame::Doubly, Frame::PerQubit}) {
          worst = std::max(worst, invariant_gap(makhlin_invariants(two_step_entangler(t, p, f)), closed));
        }
      }
    }
    return worst;
  });

  check("local-dressing invariance of (G1, G2)", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const Operator4 u = expm_skew(random_generator(rng, 6.0));
      worst = std::max(worst, invariant_gap(makhlin_invariants(u),
                                            makhlin_invariants(random_local_dressing(u, rng))));
    }
    return worst;
  });

  check("Weyl round trip on interior points", 1e-8, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const WeylPoint c = random_interior_weyl_point(rng);
      const Operator4 u = random_local_dressing(canonical_gate(c), rng);
      worst = std::max(worst, weyl_gap(weyl_coordinates(u), c));
    }
    return worst;
  });

  check("Weyl / invariant consistency", 1e-8, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const Operator4 u = expm_skew(random_generator(rng, 6.0));
      worst = std::max(worst, invariant_gap(makhlin_invariants(canonical_gate(weyl_coordinates(u))),
                                            makhlin_invariants(u)));
    }
    return worst;
  });

  check("c3 = 0 along the two-step family", 1e-8, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const SystemParams p = SystemParams::from_ratios(3.0 * unit(rng), 0.0, 0.1 * unit(rng));
      const double t = 2.0 * std::numbers::pi * unit(rng);
      worst = std::max(worst, std::abs(weyl_coordinates(two_step_entangler(t, p, Frame::Doubly)).c3));
    }
    return worst;
  });

  check("c3 = 0 along the single-step family", 1e-8, [&] {
    double worst = 0.0;
    const struct {
      double delta, omega1, t_units;
    } runs[] = {{0.0, std::sqrt(15.0), 1.0}, {1.0, 3.7781, 1.2753}, {1.5, 3.7152, 1.0961}, {2.0, 3.6179, 0.9849}};
    for (const auto& r : runs) {
      const SystemParams p = SystemParams::from_ratios(r.delta, r.omega1);
      for (const TrajectorySample& s : weyl_trajectory(p, r.t_units * kSingleStepTimeUnit, 257)) {
        worst = std::max(worst, std::abs(s.point.c3));
      }
    }
    return worst;
  });

  check("two-step products are CNOT-class for |delta| <= 2g", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const SystemParams p = SystemParams::from_ratios(4.0 * unit(rng) - 2.0, 0.0, 0.1 * unit(rng));
      for (Frame f : {Frame::Doubly, Frame::PerQubit}) {
        worst = std::max(worst, invariant_gap(makhlin_invariants(two_step_entangler(two_step_time(p), p, f)),
                                              InvariantPair{0.0, 1.0}));
      }
    }
    return worst;
  });

  return out;
}

}  // namespace cnotcal
