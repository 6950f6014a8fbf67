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

// Published reference values (four printed decimals) for the detuned CNOT
// sequences.

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace cnotcal::reference {

using C = std::complex<double>;

struct TableOneRow {
  double delta;
  double t2;
  double t1;      ///< < 0 when the cell is empty
  double omega1;  ///< < 0 when the cell is empty
};

inline constexpr std::array<TableOneRow, 21> kTableOne{{
    {0.00, 1.0000, 1.0000, 3.8730}, {0.10, 1.0003, 1.0009, 3.8724}, {0.20, 1.0014, 1.0037, 3.8707},
    {0.30, 1.0031, 1.0085, 3.8679}, {0.40, 1.0056, 1.0155, 3.8638}, {0.50, 1.0088, 1.0253, 3.8583},
    {0.60, 1.0128, 1.0386, 3.8513}, {0.70, 1.0177, 1.0568, 3.8422}, {0.80, 1.0235, 1.0827, 3.8303},
    {0.90, 1.0303, 1.1245, 3.8132}, {1.00, 1.0383, 1.2753, 3.7781}, {1.10, 1.0476, -1, -1},
    {1.20, 1.0585, -1, -1},         {1.30, 1.0713, -1, -1},         {1.40, 1.0863, -1, -1},
    {1.50, 1.1042, -1, -1},         {1.60, 1.1261, -1, -1},         {1.70, 1.1536, -1, -1},
    {1.80, 1.1901, -1, -1},         {1.90, 1.2445, -1, -1},         {2.00, 1.4142, -1, -1},
}};

struct TableTwoRow {
  double delta;
  double t1;
  double omega1;
  double g1;
  double g2;
};

inline constexpr std::array<TableTwoRow, 11> kTableTwo{{
    {1.00, 1.2753, 3.7781, 0.0000, 1.0000}, {1.10, 1.2330, 3.7470, 0.0030, 0.9994},
    {1.20, 1.1945, 3.7323, 0.0106, 0.9978}, {1.30, 1.1590, 3.7250, 0.0214, 0.9955},
    {1.40, 1.1262, 3.7203, 0.0340, 0.9927}, {1.50, 1.0961, 3.7152, 0.0476, 0.9898},
    {1.60, 1.0686, 3.7074, 0.0614, 0.9867}, {1.70, 1.0438, 3.6952, 0.0749, 0.9837},
    {1.80, 1.0216, 3.6772, 0.0879, 0.9808}, {1.90, 1.0019, 3.6519, 0.1003, 0.9780},
    {2.00, 0.9849, 3.6179, 0.1118, 0.9754},
}};

inline constexpr double kFidelityAtOnePointFive = 0.9448;

/// Two-step entangling propagator at delta = g, t = 1.0383 pi/4g, frame 1.
inline Eigen::Matrix4cd two_step_segment_frame1() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = C(0.9180, 0.3965);
  m(1, 1) = C(0.6124, 0.3536);
  m(1, 2) = C(0, -0.7071);
  m(2, 1) = C(0, -0.7071);
  m(2, 2) = C(0.6124, -0.3536);
  m(3, 3) = C(0.9180, -0.3965);
  return m;
}

/// Same segment in the per-qubit rotating frame.
inline Eigen::Matrix4cd two_step_segment_frame2() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 1) = C(0.7024, 0.0817);
  m(1, 2) = C(-0.2804, -0.6491);
  m(2, 1) = C(0.2804, -0.6491);
  m(2, 2) = C(0.7024, -0.0817);
  m(3, 3) = 1;
  return m;
}

/// Single-step propagator at delta = g, omega1 = 3.7781 g, t = 1.2753 pi/2g,
/// as printed (rows and columns ordered with qubit 1 most significant).
inline Eigen::Matrix4cd single_step_gate_printed() {
  Eigen::Matrix4cd m;
  m << C(-0.2553, -0.4300), C(0.4821, -0.1324), C(-0.4821, 0.1324), C(0, 0.5001),  //
      C(0.4821, -0.1324), C(-0.0001, 0.5001), C(0, 0.5001), C(0.4821, 0.1324),     //
      C(-0.4821, 0.1324), C(0, 0.5001), C(-0.0001, -0.5001), C(0.4821, 0.1324),    //
      C(0, 0.5001), C(0.4821, 0.1324), C(0.4821, 0.1324), C(-0.2553, 0.4300);
  return m;
}

}  // namespace cnotcal::reference
