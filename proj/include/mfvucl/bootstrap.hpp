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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfvucl/core.hpp"
#include "mfvucl/mfv.hpp"

namespace mfvucl {

enum class StatisticKind { mfv, mean };

enum class BootstrapMethod { nonparametric, hybrid_parametric };

/// How the hybrid parametric bootstrap builds one synthetic dataset.
///  - resample_perturb: draw n indices with replacement, then draw each
///    picked element from N(x_i, sigma_i).
///  - per_element: keep every index once and draw each element from
///    N(x_i, sigma_i).
enum class HpbKernel { resample_perturb, per_element };

inline constexpr std::size_t kDefaultReplicates = 210000;
inline constexpr double kDefaultConfidence = 0.9545;

struct BootstrapPlan {
  BootstrapMethod method = BootstrapMethod::nonparametric;
  std::size_t replicates = kDefaultReplicates;
  std::uint64_t seed = 0;
  StatisticKind statistic = StatisticKind::mfv;
  HpbKernel kernel = HpbKernel::resample_perturb;
  unsigned threads = 0;  // 0: hardware concurrency; never affects results
  MfvConfig mfv;

  void validate() const;
};

struct BootstrapDistribution {
  std::vector<double> values;  // one statistic per replicate, in replicate order
  BootstrapPlan plan;
  double point_estimate = 0.0;
  // HPB only: elements whose value lies within 2 sigma of zero, so that
  // negative synthetic draws are likely. Draws are never truncated.
  std::vector<std::size_t> near_zero_indices;
};

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double confidence = 0.0;
  std::string method_label;
};

double evaluate_statistic(StatisticKind kind, std::span<const double> values,
                          const MfvConfig& mfv = {});

BootstrapDistribution bootstrap_nonparametric(const Dataset& dataset,
                                              const BootstrapPlan& plan);
BootstrapDistribution bootstrap_hybrid_parametric(const Dataset& dataset,
                                                  const BootstrapPlan& plan);
// Dispatches on plan.method.
BootstrapDistribution run_bootstrap(const Dataset& dataset,
                                    const BootstrapPlan& plan);

/// Two-sided percentile interval from the type-7 quantiles at
/// (1 - confidence) / 2 and (1 + confidence) / 2.
ConfidenceInterval percentile_interval(const BootstrapDistribution& dist,
                                       double confidence);
ConfidenceInterval percentile_interval(std::span<const double> values,
                                       double confidence);

std::string_view to_string(StatisticKind kind);
std::string_view to_string(BootstrapMethod method);
std::string_view to_string(HpbKernel kernel);
StatisticKind parse_statistic_kind(std::string_view text);
BootstrapMethod parse_bootstrap_method(std::string_view text);
HpbKernel parse_hpb_kernel(std::string_view text);

}  // namespace mfvucl
