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

#include "mfvucl/outliers.hpp"

#include <algorithm>
#include <cmath>

namespace mfvucl {
namespace {

struct Fences {
  double q1, q3, lower, upper;
};

Fences compute_fences(const Dataset& dataset, double k) {
  auto sorted = dataset.values();
  std::sort(sorted.begin(), sorted.end());
  const double q1 = interpolated_quantile(sorted, 0.25);
  const double q3 = interpolated_quantile(sorted, 0.75);
  const double iqr = q3 - q1;
  return {q1, q3, q1 - k * iqr, q3 + k * iqr};
}

}  // namespace

OutlierPartition iqr_partition(const Dataset& dataset, double k) {
  if (dataset.size() < 4)
    throw PreconditionError(
        "outlier screening needs at least 4 measurements for quartiles, got " +
        std::to_string(dataset.size()));
  if (!(k > 0.0) || !std::isfinite(k))
    throw InvalidArgument("whisker multiplier k must be positive and finite");

  const Fences f = compute_fences(dataset, k);
  std::vector<std::size_t> out_idx, keep_idx;
  const auto& ms = dataset.measurements();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double v = ms[i].value;
    if (v < f.lower || v > f.upper)
      out_idx.push_back(i);
    else
      keep_idx.push_back(i);
  }

  std::vector<Measurement> outliers;
  for (std::size_t i : out_idx) outliers.push_back(ms[i]);

  // q1 and q3 are interpolated between retained order statistics, so the
  // retained side is never empty.
  return OutlierPartition{std::move(out_idx),    keep_idx,
                          std::move(outliers),   dataset.subset(keep_idx),
                          f.q1,                  f.q3,
                          f.lower,               f.upper,
                          k};
}

}  // namespace mfvucl
