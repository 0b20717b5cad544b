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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mfvucl/bootstrap.hpp"
#include "mfvucl/core.hpp"
#include "mfvucl/distribution_tests.hpp"
#include "mfvucl/inventory.hpp"
#include "mfvucl/mfv.hpp"
#include "mfvucl/outliers.hpp"
#include "mfvucl/ucl.hpp"

namespace mfvucl {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

Format parse_format(std::string_view text);
// ".json" -> json, anything else -> csv.
Format format_for_path(const std::filesystem::path& path);

/// Dataset readers.
///
/// CSV: optional `# unit: <label>` / `# label: <text>` comment lines, a
/// header `value` or `value,uncertainty`, then one measurement per row.
/// Without an uncertainty column every uncertainty is 0 and the dataset is
/// marked as carrying none.
///
/// JSON: {"label": ..., "unit": ..., "measurements": [{"value": v,
/// "uncertainty": u}, ...]}; "uncertainty" must be present on all entries
/// or on none.
Dataset load_dataset(std::istream& in, Format format, std::string label = {});
Dataset load_dataset(std::string_view text, Format format,
                     std::string label = {});
Dataset load_dataset_file(const std::filesystem::path& path);

struct HistogramMarker {
  std::string label;
  double value = 0.0;
};

struct HistogramSpec {
  std::vector<double> bin_edges;
  std::vector<std::size_t> counts;
  std::vector<HistogramMarker> markers;
};

/// Uniform bins over [min, max]. Bins are right-open except the last. Constant
/// input gives the single bin [v, v].
HistogramSpec make_histogram(std::span<const double> values, std::size_t bins,
                             std::vector<HistogramMarker> markers = {});
/// Explicit, strictly increasing edges; every value must fall inside them.
HistogramSpec make_histogram(std::span<const double> values,
                             std::vector<double> edges,
                             std::vector<HistogramMarker> markers = {});

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

Json to_json(const Dataset& d);
Json to_json(const SummaryStats& s);
Json to_json(const MfvResult& r);
Json to_json(const OutlierPartition& p);
Json to_json(const TestReport& r);
Json to_json(const BootstrapPlan& p);
Json to_json(const ConfidenceInterval& ci);
Json to_json(const UclResult& u);
Json to_json(const WeightedMean& w);
Json to_json(const ConservativeReport& r);
Json to_json(const InventoryInputs& in);
Json to_json(const InventoryReport& r);
Json to_json(const HistogramSpec& h);

Dataset dataset_from_json(const Json& j);

// Text serializations. CSV for a dataset is the loader's schema; for a
// histogram it is `bin_start,bin_end,count` rows; any other report is
// flattened to `field,value` rows with dotted paths.
std::string write_dataset(const Dataset& d, Format format);
std::string write_histogram(const HistogramSpec& h, Format format);
std::string write_report(const Json& report, Format format);

}  // namespace mfvucl
