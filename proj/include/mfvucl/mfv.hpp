// Copyright 2026 The mfvucl Authors.
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

#include <cstddef>
#include <span>

#include "mfvucl/core.hpp"

namespace mfvucl {

struct MfvConfig {
  double tol_m = 1e-9;    // absolute, data units
  double tol_eps = 1e-9;  // absolute, data units
  int max_iter = 1000;

  void validate() const;
};

struct MfvResult {
  double m = 0.0;        // most frequent value
  double epsilon = 0.0;  // dihesion
  double sigma_m = 0.0;  // standard error of m
  int iterations = 0;
  bool converged = false;
};

/// Hajagos' starting dihesion, sqrt(3)/2 * (max - min).
double initial_dihesion(std::span<const double> values);
double initial_dihesion(const Dataset& dataset);

/// Steiner's most frequent value.
///
/// Starts from the median and the initial dihesion, then alternates the
/// dihesion update and the weighted-location update until both move by less
/// than their tolerances. Each step refreshes the dihesion from (M_j, eps_j)
/// first and then the location from (M_j, eps_{j+1}).
///
/// Constant input returns (c, 0, 0) without iterating. On small samples the
/// dihesion can contract onto a single data point (eps -> 0 is an attracting
/// fixed point there); that case is detected and returned as m equal to that
/// point with eps = 0 and sigma_m = 0.
///
/// Thread-safe; the bootstrap engine calls it concurrently.
MfvResult mfv_fit(std::span<const double> values, const MfvConfig& config = {});
MfvResult mfv_fit(const Dataset& dataset, const MfvConfig& config = {});

/// 1 / sqrt(sum 1 / (eps^2 + (x_i - m)^2)), the symmetric-case standard error.
/// Returns 0 when eps == 0 and some x_i == m.
double mfv_variance(std::span<const double> values, double m, double epsilon);
double mfv_variance(const Dataset& dataset, double m, double epsilon);

// Right-hand sides of the two update equations evaluated at (m, epsilon).
// Exposed for fixed-point checks.
double mfv_location_update(std::span<const double> values, double m,
                           double epsilon);
double mfv_dihesion_update(std::span<const double> values, double m,
                           double epsilon);

}  // namespace mfvucl
