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

#include "mfvucl/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mfvucl {

Dataset::Dataset(std::vector<Measurement> measurements, std::string unit,
                 std::string label, bool has_uncertainty)
    : measurements_(std::move(measurements)),
      unit_(std::move(unit)),
      label_(std::move(label)),
      has_uncertainty_(has_uncertainty) {
  if (measurements_.empty()) throw InvalidArgument("dataset is empty");
  for (std::size_t i = 0; i < measurements_.size(); ++i) {
    const auto& m = measurements_[i];
    if (!std::isfinite(m.value))
      throw InvalidArgument("measurement " + std::to_string(i) +
                            ": value is not finite");
    if (!std::isfinite(m.uncertainty) || m.uncertainty < 0.0)
      throw InvalidArgument("measurement " + std::to_string(i) +
                            ": uncertainty must be finite and >= 0");
    if (!has_uncertainty_ && m.uncertainty != 0.0)
      throw InvalidArgument("measurement " + std::to_string(i) +
                            ": uncertainty given for a dataset without them");
  }
}

Dataset Dataset::from_values(std::span<const double> values, std::string unit,
                             std::string label) {
  std::vector<Measurement> ms;
  ms.reserve(values.size());
  for (double v : values) ms.push_back({v, 0.0});
  return Dataset(std::move(ms), std::move(unit), std::move(label), false);
}

std::vector<double> Dataset::values() const {
  std::vector<double> out;
  out.reserve(measurements_.size());
  for (const auto& m : measurements_) out.push_back(m.value);
  return out;
}

std::vector<double> Dataset::uncertainties() const {
  std::vector<double> out;
  out.reserve(measurements_.size());
  for (const auto& m : measurements_) out.push_back(m.uncertainty);
  return out;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<Measurement> ms;
  ms.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= measurements_.size())
      throw InvalidArgument("subset: index out of range");
    ms.push_back(measurements_[i]);
  }
  return Dataset(std::move(ms), unit_, label_, has_uncertainty_);
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("summarize: no values");
  SummaryStats s;
  s.n = values.size();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  const double n = static_cast<double>(s.n);
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  // Rounding can push the mean a hair outside [min, max] for constant data.
  s.mean = std::clamp(s.mean, s.min, s.max);
  if (s.n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(ss / (n - 1.0));
  }
  return s;
}

SummaryStats summarize(const Dataset& dataset) {
  const auto v = dataset.values();
  return summarize(v);
}

double median(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("median: no values");
  std::vector<double> tmp(values.begin(), values.end());
  const std::size_t mid = tmp.size() / 2;
  std::nth_element(tmp.begin(), tmp.begin() + mid, tmp.end());
  const double upper = tmp[mid];
  if (tmp.size() % 2 == 1) return upper;
  const double lower = *std::max_element(tmp.begin(), tmp.begin() + mid);
  return 0.5 * (lower + upper);
}

double interpolated_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InvalidArgument("quantile: no values");
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidArgument("quantile: probability outside [0, 1]");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace mfvucl
