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
#include <optional>
#include <vector>

#include "mfvucl/core.hpp"

namespace mfvucl {

/// Boxplot screen result. Indices refer to the input dataset; both lists are
/// ascending. Outliers are reported, never dropped: `retained` is a copy of
/// the non-outlying measurements in their original order.
struct OutlierPartition {
  std::vector<std::size_t> outlier_indices;
  std::vector<std::size_t> retained_indices;
  std::vector<Measurement> outliers;
  Dataset retained;
  double q1 = 0.0;
  double q3 = 0.0;
  double lower_fence = 0.0;
  double upper_fence = 0.0;
  double k = 1.5;
};

inline constexpr double kDefaultWhisker = 1.5;

/// Tukey fences at q1 - k*IQR and q3 + k*IQR, with type-7 quartiles.
/// Requires n >= 4 and k > 0.
OutlierPartition iqr_partition(const Dataset& dataset,
                               double k = kDefaultWhisker);

}  // namespace mfvucl
