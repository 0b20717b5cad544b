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

#include "mfvucl/analysis.hpp"

namespace mfvucl {
namespace {

std::optional<TestReport> try_normality(const Dataset& d, const char* side,
                                        std::vector<std::string>& notes) {
  try {
    return shapiro_wilk(d.values());
  } catch (const PreconditionError& e) {
    notes.push_back(std::string("normality (") + side + ") skipped: " + e.what());
    return std::nullopt;
  }
}

}  // namespace

AnalysisReport run_analysis(const Dataset& dataset,
                            const AnalysisOptions& options) {
  AnalysisReport r{.dataset = dataset,
                   .options = options,
                   .summary = summarize(dataset),
                   .analyzed = dataset};

  try {
    r.outliers = iqr_partition(dataset, options.outlier_k);
  } catch (const PreconditionError& e) {
    r.notes.push_back(std::string("outlier screen skipped: ") + e.what());
  }

  r.normality_all = try_normality(dataset, "all", r.notes);
  if (r.outliers) {
    if (r.outliers->outliers.empty())
      r.normality_retained = r.normality_all;
    else
      r.normality_retained =
          try_normality(r.outliers->retained, "retained", r.notes);
    if (options.exclude_outliers) r.analyzed = r.outliers->retained;
  }

  r.mfv = mfv_fit(r.analyzed, options.plan.mfv);
  r.conservative =
      conservative_upper_bound(r.analyzed, options.confidence, options.plan);

  try {
    r.weighted = weighted_mean(r.analyzed);
  } catch (const PreconditionError&) {
    // comparison output only; absent without uncertainties
  }

  if (options.inventory) {
    InventoryInputs in = *options.inventory;
    in.concentration = r.conservative.selected.value;
    r.inventory = estimate_inventory(in);
  }

  if (options.histogram_bins > 0) {
    const auto& ci = r.conservative.bootstrap_interval;
    r.histogram = make_histogram(
        r.conservative.bootstrap_values, options.histogram_bins,
        {{"point_estimate", r.conservative.bootstrap_point_estimate},
         {"lower", ci.lower},
         {"upper", ci.upper}});
  }
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  Json run;
  run["confidence"] = r.options.confidence;
  run["alpha"] = 1.0 - r.options.confidence;
  run["seed"] = r.options.plan.seed;
  run["seed_generated"] = r.options.seed_generated;
  run["replicates"] = r.options.plan.replicates;
  run["statistic"] = std::string(to_string(r.options.plan.statistic));
  run["hpb_kernel"] = std::string(to_string(r.options.plan.kernel));
  run["outlier_k"] = r.options.outlier_k;
  run["outlier_mode"] = r.options.exclude_outliers ? "exclude" : "report";
  j["run"] = std::move(run);

  Json ds;
  ds["label"] = r.dataset.label();
  ds["unit"] = r.dataset.unit();
  ds["n"] = r.dataset.size();
  j["dataset"] = std::move(ds);
  j["summary"] = to_json(r.summary);
  j["outliers"] = r.outliers ? to_json(*r.outliers) : Json(nullptr);

  Json normality;
  normality["all"] = r.normality_all ? to_json(*r.normality_all) : Json(nullptr);
  normality["retained"] =
      r.normality_retained ? to_json(*r.normality_retained) : Json(nullptr);
  j["normality"] = std::move(normality);

  j["analyzed_n"] = r.analyzed.size();
  j["mfv"] = to_json(r.mfv);
  j["conservative"] = to_json(r.conservative);
  j["weighted_mean"] = r.weighted ? to_json(*r.weighted) : Json(nullptr);
  if (r.inventory) {
    Json inv = to_json(*r.inventory);
    if (!r.options.isotope.empty()) inv["isotope"] = r.options.isotope;
    j["inventory"] = std::move(inv);
  }
  if (r.histogram) j["histogram"] = to_json(*r.histogram);
  j["notes"] = r.notes;
  return j;
}

}  // namespace mfvucl
