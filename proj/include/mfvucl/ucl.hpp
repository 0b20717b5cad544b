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
#include <string>
#include <vector>

#include "mfvucl/bootstrap.hpp"
#include "mfvucl/core.hpp"

namespace mfvucl {

struct UclResult {
  std::string method_label;
  double value = 0.0;
  double confidence = 0.0;  // 1 - alpha
  // Echo of the inputs the bound was derived from.
  std::size_t n = 0;
  double mean = 0.0;
  double std_dev = 0.0;
};

struct WeightedMean {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Datasets with at least this many points use the nonparametric bootstrap
/// in the conservative pipeline; smaller ones use HPB.
inline constexpr std::size_t kNonparametricMinSize = 10;

struct ConservativeReport {
  UclResult bootstrap_upper;
  ConfidenceInterval bootstrap_interval;
  BootstrapPlan bootstrap_plan;  // as run, including the chosen method
  double bootstrap_point_estimate = 0.0;
  std::vector<double> bootstrap_values;  // kept for histogram export
  std::vector<std::size_t> near_zero_indices;  // HPB draws may go negative
  UclResult chebyshev;
  UclResult max_plus_2sigma;
  UclResult selected;
  std::string selection_rule;
};

/// Chebyshev-inequality one-sided bound mean + sqrt(1/alpha - 1) * s / sqrt(n).
UclResult chebyshev_ucl(const SummaryStats& stats, double alpha);

/// Largest observed value plus twice its uncertainty. Among tied maxima the
/// largest uncertainty is used.
UclResult max_plus_2sigma(const Dataset& dataset);

/// Inverse-variance weighted mean. Comparison output only.
WeightedMean weighted_mean(const Dataset& dataset);

/// Runs the bootstrap upper percentile bound (nonparametric for n >= 10,
/// HPB otherwise), the Chebyshev bound at alpha = 1 - confidence, and
/// max + 2 sigma, then selects the largest. `plan_defaults` supplies seed,
/// replicate count, statistic, kernel and threads; its method is overridden.
ConservativeReport conservative_upper_bound(const Dataset& dataset,
                                            double confidence,
                                            const BootstrapPlan& plan_defaults);

}  // namespace mfvucl
