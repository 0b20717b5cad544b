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

#include "mfvucl/mfv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace mfvucl {
namespace {

// Dihesion below this fraction of the data range means the iteration has
// locked onto one data point.
constexpr double kCollapseRatio = 1e-10;

}  // namespace

void MfvConfig::validate() const {
  if (!(tol_m > 0.0) || !(tol_eps > 0.0))
    throw InvalidArgument("MFV tolerances must be positive");
  if (max_iter < 1) throw InvalidArgument("MFV max_iter must be >= 1");
}

double initial_dihesion(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("initial_dihesion: no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return std::numbers::sqrt3 / 2.0 * (*hi - *lo);
}

double initial_dihesion(const Dataset& dataset) {
  return initial_dihesion(dataset.values());
}

double mfv_location_update(std::span<const double> values, double m,
                           double epsilon) {
  const double e2 = epsilon * epsilon;
  double num = 0.0, den = 0.0;
  for (double x : values) {
    const double w = 1.0 / (e2 + (x - m) * (x - m));
    num += x * w;
    den += w;
  }
  return num / den;
}

double mfv_dihesion_update(std::span<const double> values, double m,
                           double epsilon) {
  const double e2 = epsilon * epsilon;
  double num = 0.0, den = 0.0;
  for (double x : values) {
    const double d2 = (x - m) * (x - m);
    const double w = 1.0 / (e2 + d2);
    num += d2 * w * w;
    den += w * w;
  }
  return std::sqrt(std::max(0.0, 3.0 * num / den));
}

MfvResult mfv_fit(std::span<const double> values, const MfvConfig& config) {
  config.validate();
  if (values.empty()) throw InvalidArgument("mfv_fit: no values");
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidArgument("mfv_fit: non-finite value");

  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  if (range == 0.0) return MfvResult{*lo, 0.0, 0.0, 0, true};

  // Iterate on (x - center) / range so the weights stay O(1) regardless of
  // the data's magnitude.
  const double center = median(values);
  std::vector<double> u(values.size());
  std::transform(values.begin(), values.end(), u.begin(),
                 [&](double x) { return (x - center) / range; });

  // Tolerances in normalized units, floored a few ulps above round-off.
  const double floor_tol = 64.0 * std::numeric_limits<double>::epsilon();
  const double tol_m = std::max(config.tol_m / range, floor_tol);
  const double tol_e = std::max(config.tol_eps / range, floor_tol);

  double m = 0.0;  // the median, normalized
  double eps = std::numbers::sqrt3 / 2.0;

  MfvResult r;
  for (int it = 1; it <= config.max_iter; ++it) {
    const double eps_next = mfv_dihesion_update(u, m, eps);
    if (eps_next <= kCollapseRatio) {
      const auto nearest = std::min_element(
          u.begin(), u.end(),
          [m](double a, double b) { return std::abs(a - m) < std::abs(b - m); });
      const double snapped = values[static_cast<std::size_t>(nearest - u.begin())];
      return MfvResult{snapped, 0.0, 0.0, it, true};
    }
    const double m_next = mfv_location_update(u, m, eps_next);
    const bool done =
        std::abs(m_next - m) < tol_m && std::abs(eps_next - eps) < tol_e;
    m = m_next;
    eps = eps_next;
    r.iterations = it;
    if (done) {
      r.converged = true;
      break;
    }
  }

  r.m = std::clamp(center + m * range, *lo, *hi);
  r.epsilon = eps * range;
  r.sigma_m = mfv_variance(values, r.m, r.epsilon);
  return r;
}

MfvResult mfv_fit(const Dataset& dataset, const MfvConfig& config) {
  const auto v = dataset.values();
  return mfv_fit(v, config);
}

double mfv_variance(std::span<const double> values, double m, double epsilon) {
  if (values.empty()) throw InvalidArgument("mfv_variance: no values");
  if (!(epsilon >= 0.0)) throw InvalidArgument("mfv_variance: epsilon < 0");
  const double e2 = epsilon * epsilon;
  double info = 0.0;
  for (double x : values) {
    const double d2 = e2 + (x - m) * (x - m);
    if (d2 == 0.0) return 0.0;
    info += 1.0 / d2;
  }
  return 1.0 / std::sqrt(info);
}

double mfv_variance(const Dataset& dataset, double m, double epsilon) {
  const auto v = dataset.values();
  return mfv_variance(v, m, epsilon);
}

}  // namespace mfvucl
