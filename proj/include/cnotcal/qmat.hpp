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

// Fixed-size complex linear algebra for two-qubit gates.
//
// Basis convention: row/column index = 2*q2 + q1, i.e. |q2 q1> with qubit 1
// the least-significant bit. A product sigma_2^a sigma_1^b is therefore
// kron2(sigma^a, sigma^b).

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <string>

#include "cnotcal/errors.hpp"

namespace cnotcal {

using Complex = std::complex<double>;
using Operator2 = Eigen::Matrix2cd;
using Operator4 = Eigen::Matrix4cd;

inline constexpr Complex kI{0.0, 1.0};

namespace pauli {
inline Operator2 identity() { return Operator2::Identity(); }
inline Operator2 x() {
  Operator2 m;
  m << 0, 1, 1, 0;
  return m;
}
inline Operator2 y() {
  Operator2 m;
  m << 0, -kI, kI, 0;
  return m;
}
inline Operator2 z() {
  Operator2 m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

/// Element of u(4): a skew-Hermitian 4x4 matrix. Kept distinct from
/// Operator4 so that a generator cannot be multiplied into a gate product
/// by accident.
class Generator4 {
 public:
  Generator4() : m_(Operator4::Zero()) {}
  explicit Generator4(const Operator4& m) : m_(m) {}

  const Operator4& matrix() const { return m_; }

  /// Largest deviation from G^dagger = -G, entrywise.
  double skew_defect() const { return (m_.adjoint() + m_).cwiseAbs().maxCoeff(); }

  Generator4& operator+=(const Generator4& o) {
    m_ += o.m_;
    return *this;
  }
  Generator4& operator-=(const Generator4& o) {
    m_ -= o.m_;
    return *this;
  }
  Generator4& operator*=(double s) {
    m_ *= s;
    return *this;
  }

  friend Generator4 operator+(Generator4 a, const Generator4& b) { return a += b; }
  friend Generator4 operator-(Generator4 a, const Generator4& b) { return a -= b; }
  friend Generator4 operator-(Generator4 a) { return a *= -1.0; }
  friend Generator4 operator*(double s, Generator4 a) { return a *= s; }
  friend Generator4 operator*(Generator4 a, double s) { return a *= s; }

 private:
  Operator4 m_;
};

/// Tensor product with the qubit-2 factor on the left.
inline Operator4 kron2(const Operator2& q2, const Operator2& q1) {
  Operator4 out;
  for (int r2 = 0; r2 < 2; ++r2)
    for (int c2 = 0; c2 < 2; ++c2)
      out.block<2, 2>(2 * r2, 2 * c2) = q2(r2, c2) * q1;
  return out;
}

/// ||A - B||_F.
inline double frob_dist(const Operator4& a, const Operator4& b) { return (a - b).norm(); }

/// ||U^dagger U - I||_F.
inline double unitarity_defect(const Operator4& u) {
  return (u.adjoint() * u - Operator4::Identity()).norm();
}

inline void require_unitary(const Operator4& u, double tol, const char* where) {
  const double defect = unitarity_defect(u);
  if (!(defect <= tol)) {
    throw ContractViolation(std::string(where) + ": operator is not unitary (defect " +
                            std::to_string(defect) + ")");
  }
}

/// exp(G) for skew-Hermitian G, via the eigendecomposition of the Hermitian
/// matrix -iG. The result is unitary to rounding.
inline Operator4 expm_skew(const Generator4& g) {
  if (!(g.skew_defect() <= 1e-10)) {
    throw ContractViolation("expm_skew: generator is not skew-Hermitian");
  }
  Operator4 herm = -kI * g.matrix();
  herm = 0.5 * (herm + herm.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Operator4> eig(herm);
  const auto& v = eig.eigenvectors();
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(kI * eig.eigenvalues()(k));
  return v * phases.asDiagonal() * v.adjoint();
}

/// SWAP * U * SWAP: the same operator written with qubit 1 as the
/// most-significant bit.
inline Operator4 swap_qubit_order(const Operator4& u) {
  Eigen::PermutationMatrix<4> swap;
  swap.indices() << 0, 2, 1, 3;
  return swap * u * swap;
}

}  // namespace cnotcal
