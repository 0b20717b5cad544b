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

#include "mfvucl/ucl.hpp"

#include <algorithm>
#include <cmath>

namespace mfvucl {

UclResult chebyshev_ucl(const SummaryStats& stats, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InvalidArgument("alpha must lie in (0, 1)");
  if (stats.n < 2 || !stats.std_dev)
    throw PreconditionError(
        "Chebyshev UCL needs n >= 2 (sample standard deviation undefined)");
  const double s = *stats.std_dev;
  const double n = static_cast<double>(stats.n);
  const double value = stats.mean + std::sqrt(1.0 / alpha - 1.0) * (s / std::sqrt(n));
  return UclResult{"chebyshev", value, 1.0 - alpha, stats.n, stats.mean, s};
}

UclResult max_plus_2sigma(const Dataset& dataset) {
  if (!dataset.has_uncertainty())
    throw PreconditionError(
        "max + 2 sigma needs the uncertainty of the maximum measurement");
  const auto& ms = dataset.measurements();
  Measurement top = ms.front();
  for (const auto& m : ms) {
    if (m.value > top.value ||
        (m.value == top.value && m.uncertainty > top.uncertainty))
      top = m;
  }
  const auto stats = summarize(dataset);
  return UclResult{"max_plus_2sigma", top.value + 2.0 * top.uncertainty,
                   0.9545, stats.n, stats.mean, stats.std_dev.value_or(0.0)};
}

WeightedMean weighted_mean(const Dataset& dataset) {
  double sw = 0.0, swx = 0.0;
  for (const auto& m : dataset.measurements()) {
    if (!(m.uncertainty > 0.0))
      throw PreconditionError(
          "weighted mean needs uncertainty > 0 for every measurement");
    const double w = 1.0 / (m.uncertainty * m.uncertainty);
    sw += w;
    swx += w * m.value;
  }
  return WeightedMean{swx / sw, 1.0 / std::sqrt(sw)};
}

ConservativeReport conservative_upper_bound(const Dataset& dataset,
                                            double confidence,
                                            const BootstrapPlan& plan_defaults) {
  if (!(confidence > 0.0 && confidence < 1.0))
    throw InvalidArgument("confidence must lie in (0, 1)");

  ConservativeReport report;
  BootstrapPlan plan = plan_defaults;
  plan.method = dataset.size() >= kNonparametricMinSize
                    ? BootstrapMethod::nonparametric
                    : BootstrapMethod::hybrid_parametric;
  const auto dist = run_bootstrap(dataset, plan);
  report.bootstrap_plan = plan;
  report.bootstrap_point_estimate = dist.point_estimate;
  report.bootstrap_interval = percentile_interval(dist, confidence);
  report.bootstrap_values = dist.values;
  report.near_zero_indices = dist.near_zero_indices;

  const auto stats = summarize(dataset);
  report.bootstrap_upper = UclResult{
      "bootstrap_" + std::string(to_string(plan.method)) + "_" +
          std::string(to_string(plan.statistic)) + "_percentile_upper",
      report.bootstrap_interval.upper, confidence, stats.n, stats.mean,
      stats.std_dev.value_or(0.0)};
  report.chebyshev = chebyshev_ucl(stats, 1.0 - confidence);
  report.max_plus_2sigma = max_plus_2sigma(dataset);

  // Ties keep the earliest component in this order.
  report.selected = report.bootstrap_upper;
  for (const auto* c : {&report.chebyshev, &report.max_plus_2sigma})
    if (c->value > report.selected.value) report.selected = *c;
  report.selection_rule =
      "largest of bootstrap percentile upper bound, Chebyshev UCL, "
      "max + 2 sigma";
  return report;
}

}  // namespace mfvucl
