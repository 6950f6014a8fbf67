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

// Generator basis and rotating-wave Hamiltonians for two capacitively or
// inductively coupled phase qubits.

#include <array>
#include <cmath>
#include <string_view>

#include "cnotcal/errors.hpp"
#include "cnotcal/qmat.hpp"

namespace cnotcal {

/// Physical rates of the two-qubit system. Every rate shares the units of
/// the transverse coupling g; the public API works with g = 1 so that each
/// field reads directly as a ratio (delta/g, omega1/g, g_tilde/g).
struct SystemParams {
  double g = 1.0;        ///< transverse (XX+YY) coupling, > 0
  double g_tilde = 0.0;  ///< longitudinal ZZ coupling, >= 0
  double delta = 0.0;    ///< detuning of qubit 2 from qubit 1, signed
  double omega1 = 0.0;   ///< Rabi amplitude of the drive on qubit 1, >= 0

  static SystemParams from_ratios(double delta_over_g, double omega1_over_g = 0.0,
                                  double g_tilde_over_g = 0.0) {
    return SystemParams{1.0, g_tilde_over_g, delta_over_g, omega1_over_g};
  }

  void validate() const {
    if (!(g > 0.0)) throw ContractViolation("SystemParams: g must be positive");
    if (!(g_tilde >= 0.0)) throw ContractViolation("SystemParams: g_tilde must be >= 0");
    if (!(omega1 >= 0.0)) throw ContractViolation("SystemParams: omega1 must be >= 0");
    if (!std::isfinite(delta)) throw ContractViolation("SystemParams: delta must be finite");
  }
};

enum class GeneratorName { X1, Y1, Z1, X2, Y2, Z2, XX, YY, ZZ, XY, YX };

inline constexpr std::array<GeneratorName, 11> kAllGenerators = {
    GeneratorName::X1, GeneratorName::Y1, GeneratorName::Z1, GeneratorName::X2,
    GeneratorName::Y2, GeneratorName::Z2, GeneratorName::XX, GeneratorName::YY,
    GeneratorName::ZZ, GeneratorName::XY, GeneratorName::YX};

inline std::string_view to_string(GeneratorName n) {
  switch (n) {
    case GeneratorName::X1: return "X1";
    case GeneratorName::Y1: return "Y1";
    case GeneratorName::Z1: return "Z1";
    case GeneratorName::X2: return "X2";
    case GeneratorName::Y2: return "Y2";
    case GeneratorName::Z2: return "Z2";
    case GeneratorName::XX: return "XX";
    case GeneratorName::YY: return "YY";
    case GeneratorName::ZZ: return "ZZ";
    case GeneratorName::XY: return "XY";
    case GeneratorName::YX: return "YX";
  }
  return "?";
}

/// (i/2) times the Pauli product named by `name`. In two-letter names the
/// first letter acts on qubit 2 and the second on qubit 1, so XY is
/// (i/2) sigma_2^x sigma_1^y.
inline Generator4 generator(GeneratorName name) {
  using namespace pauli;
  const Operator2 one = identity();
  Operator4 p;
  switch (name) {
    case GeneratorName::X1: p = kron2(one, x()); break;
    case GeneratorName::Y1: p = kron2(one, y()); break;
    case GeneratorName::Z1: p = kron2(one, z()); break;
    case GeneratorName::X2: p = kron2(x(), one); break;
    case GeneratorName::Y2: p = kron2(y(), one); break;
    case GeneratorName::Z2: p = kron2(z(), one); break;
    case GeneratorName::XX: p = kron2(x(), x()); break;
    case GeneratorName::YY: p = kron2(y(), y()); break;
    case GeneratorName::ZZ: p = kron2(z(), z()); break;
    case GeneratorName::XY: p = kron2(x(), y()); break;
    case GeneratorName::YX: p = kron2(y(), x()); break;
  }
  return Generator4(0.5 * kI * p);
}

/// iH in the doubly rotating frame (both qubits at the qubit-1 splitting):
///   -delta Z2 + omega1 X1 + g (XX + YY) + g_tilde ZZ.
/// The propagator of a segment of length t is expm_skew(-t * h).
inline Generator4 h_rwa_frame1(const SystemParams& p) {
  using G = GeneratorName;
  return -p.delta * generator(G::Z2) + p.omega1 * generator(G::X1) +
         p.g * (generator(G::XX) + generator(G::YY)) + p.g_tilde * generator(G::ZZ);
}

/// iH(t) in the frame co-rotating with each qubit's own splitting. The
/// flip-flop term picks up the phases exp(-/+ i delta t) in its central block.
inline Generator4 h_rwa_frame2(const SystemParams& p, double t) {
  using G = GeneratorName;
  const double c = std::cos(p.delta * t);
  const double s = std::sin(p.delta * t);
  return p.omega1 * generator(G::X1) +
         p.g * (c * (generator(G::XX) + generator(G::YY)) +
                s * (generator(G::YX) - generator(G::XY))) +
         p.g_tilde * generator(G::ZZ);
}

}  // namespace cnotcal
