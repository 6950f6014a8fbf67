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

// Nelder-Mead simplex search with box constraints.
//
// Bounds are enforced by projecting every proposed vertex onto the box, so
// the objective is never evaluated outside it. Termination happens when the
// simplex diameter (max-norm) drops below x_tolerance, or when the spread
// of function values drops below f_tolerance, or after max_iterations.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "cnotcal/errors.hpp"

namespace cnotcal {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

struct NMOptions {
  int max_iterations = 5000;
  double x_tolerance = 1e-10;
  double f_tolerance = 1e-14;
  std::vector<Interval> bounds;  ///< one per dimension
  std::uint64_t seed = 42;       ///< used by callers that randomize starts
  /// Initial simplex edge as a fraction of each bound interval's width.
  double initial_step = 0.05;
  /// Called once per iteration with the best objective value so far.
  std::function<void(int, double)> on_iteration;
};

struct NMResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

inline void validate_bounds(std::span<const Interval> bounds, std::size_t dim) {
  if (bounds.size() != dim) throw ContractViolation("nelder_mead: one bound per dimension required");
  for (const Interval& b : bounds) {
    if (!(b.lower <= b.upper)) throw ContractViolation("nelder_mead: lower bound exceeds upper bound");
  }
}

inline NMResult nelder_mead(const Objective& f, std::vector<double> x0, const NMOptions& opts) {
  const std::size_t n = x0.size();
  if (n == 0) throw ContractViolation("nelder_mead: empty parameter vector");
  validate_bounds(opts.bounds, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x0[i] < opts.bounds[i].lower || x0[i] > opts.bounds[i].upper) {
      throw ContractViolation("nelder_mead: x0 outside bounds");
    }
  }

  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  int evaluations = 0;
  auto project = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], opts.bounds[i].lower, opts.bounds[i].upper);
  };
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) {
    const Interval b = opts.bounds[i];
    double step = opts.initial_step * (b.upper - b.lower);
    if (step == 0.0) continue;
    if (x0[i] + step > b.upper) step = -step;
    simplex[i + 1][i] = x0[i] + step;
    project(simplex[i + 1]);
  }
  std::vector<double> fv(n + 1);
  for (std::size_t j = 0; j <= n; ++j) fv[j] = eval(simplex[j]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      s2[j] = std::move(simplex[order[j]]);
      f2[j] = fv[order[j]];
    }
    simplex.swap(s2);
    fv.swap(f2);
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(simplex[j][i] - simplex[0][i]));
    return d;
  };
  auto toward = [&](const std::vector<double>& from, const std::vector<double>& to, double s) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = from[i] + s * (to[i] - from[i]);
    project(p);
    return p;
  };

  NMResult result;
  sort_simplex();
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    if (opts.on_iteration) opts.on_iteration(iter, fv[0]);
    if (diameter() < opts.x_tolerance || fv[n] - fv[0] < opts.f_tolerance) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[j][i] / static_cast<double>(n);

    // Points along the line from the worst vertex through the centroid.
    const std::vector<double> xr = toward(centroid, simplex[n], -kReflect);
    const double fr = eval(xr);
    if (fr < fv[0]) {
      const std::vector<double> xe = toward(centroid, simplex[n], -kExpand);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[n] = xe;
        fv[n] = fe;
      } else {
        simplex[n] = xr;
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      simplex[n] = xr;
      fv[n] = fr;
    } else {
      const bool outside = fr < fv[n];
      const std::vector<double> xc =
          outside ? toward(centroid, xr, kContract) : toward(centroid, simplex[n], kContract);
      const double fc = eval(xc);
      if (fc < (outside ? fr : fv[n])) {
        simplex[n] = xc;
        fv[n] = fc;
      } else {
        for (std::size_t j = 1; j <= n; ++j) {
          simplex[j] = toward(simplex[0], simplex[j], kShrink);
          fv[j] = eval(simplex[j]);
        }
      }
    }
    sort_simplex();
  }

  result.x = simplex[0];
  result.f = fv[0];
  result.iterations = iter;
  result.evaluations = evaluations;
  return result;
}

/// Re-runs the search from its own optimum until a run stops improving.
/// Collapsed simplices are a known failure mode of Nelder-Mead; a fresh
/// simplex around the incumbent usually escapes them.
inline NMResult nelder_mead_polished(const Objective& f, std::vector<double> x0, const NMOptions& opts,
                                     int max_rounds = 4) {
  NMResult best = nelder_mead(f, std::move(x0), opts);
  int iterations = best.iterations;
  int evaluations = best.evaluations;
  for (int round = 1; round < max_rounds; ++round) {
    NMResult next = nelder_mead(f, best.x, opts);
    iterations += next.iterations;
    evaluations += next.evaluations;
    const bool improved = next.f < best.f;
    if (improved) best = std::move(next);
    if (!improved || best.f == 0.0) break;
  }
  best.iterations = iterations;
  best.evaluations = evaluations;
  return best;
}

}  // namespace cnotcal
