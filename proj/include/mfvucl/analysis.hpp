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
#include <string>
#include <vector>

#include "mfvucl/bootstrap.hpp"
#include "mfvucl/core.hpp"
#include "mfvucl/data_io.hpp"
#include "mfvucl/distribution_tests.hpp"
#include "mfvucl/inventory.hpp"
#include "mfvucl/mfv.hpp"
#include "mfvucl/outliers.hpp"
#include "mfvucl/ucl.hpp"

namespace mfvucl {

struct AnalysisOptions {
  double confidence = kDefaultConfidence;
  BootstrapPlan plan;  // seed, replicates, statistic, kernel, threads
  double outlier_k = kDefaultWhisker;
  bool exclude_outliers = false;  // analyze the retained side instead
  // When set, concentration is replaced by the selected conservative bound.
  std::optional<InventoryInputs> inventory;
  std::string isotope;
  std::size_t histogram_bins = 0;  // 0: no histogram
  bool seed_generated = false;
};

struct AnalysisReport {
  Dataset dataset;
  AnalysisOptions options;
  SummaryStats summary;
  std::optional<OutlierPartition> outliers{};
  std::optional<TestReport> normality_all{};
  std::optional<TestReport> normality_retained{};
  Dataset analyzed;  // the side the bounds were computed on
  MfvResult mfv{};
  ConservativeReport conservative{};
  std::optional<WeightedMean> weighted{};
  std::optional<InventoryReport> inventory{};
  std::optional<HistogramSpec> histogram{};
  std::vector<std::string> notes{};
};

/// summarize -> outlier screen -> Shapiro-Wilk on both sides -> MFV ->
/// conservative upper bound -> optional inventory and histogram.
/// Steps whose preconditions fail on this dataset (too few points for
/// quartiles or a normality test) are skipped with a note; failures of the
/// bound itself propagate.
AnalysisReport run_analysis(const Dataset& dataset,
                            const AnalysisOptions& options);

Json to_json(const AnalysisReport& report);

}  // namespace mfvucl
