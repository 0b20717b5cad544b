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

#include "mfvucl/data_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace mfvucl {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool is_header(const std::vector<std::string_view>& fields) {
  if (fields.empty() || fields.size() > 2) return false;
  if (fields[0] != "value") return false;
  return fields.size() == 1 || fields[1] == "uncertainty";
}

// "# key: value" metadata comments.
void read_metadata(std::string_view comment, std::string& unit,
                   std::string& label) {
  comment = trim(comment.substr(1));
  const auto colon = comment.find(':');
  if (colon == std::string_view::npos) return;
  const auto key = trim(comment.substr(0, colon));
  const auto value = std::string(trim(comment.substr(colon + 1)));
  if (key == "unit") unit = value;
  if (key == "label") label = value;
}

Dataset load_csv(std::istream& in, std::string label) {
  std::string unit;
  std::vector<Measurement> rows;
  std::size_t columns = 0;  // 0 until the header is seen
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      read_metadata(line, unit, label);
      continue;
    }
    const auto fields = split_fields(line);
    if (columns == 0) {
      if (!is_header(fields))
        throw ParseError("expected header 'value' or 'value,uncertainty'",
                         line_no);
      columns = fields.size();
      continue;
    }
    if (fields.size() != columns)
      throw ParseError("expected " + std::to_string(columns) +
                           " field(s), found " + std::to_string(fields.size()),
                       line_no);
    Measurement m;
    if (!parse_double(fields[0], m.value))
      throw ParseError("invalid value '" + std::string(fields[0]) + "'",
                       line_no);
    if (columns == 2) {
      if (!parse_double(fields[1], m.uncertainty))
        throw ParseError(
            "invalid uncertainty '" + std::string(fields[1]) + "'", line_no);
      if (m.uncertainty < 0.0)
        throw ParseError("negative uncertainty", line_no);
    }
    rows.push_back(m);
  }
  if (rows.empty()) throw ParseError("no measurements found", 0);
  return Dataset(std::move(rows), std::move(unit), std::move(label),
                 columns == 2);
}

Dataset load_json(std::istream& in, std::string label) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  Dataset d = dataset_from_json(j);
  if (d.label().empty() && !label.empty())
    return Dataset(d.measurements(), d.unit(), std::move(label),
                   d.has_uncertainty());
  return d;
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, format_number(j.get<double>()));
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw InvalidArgument("unknown format '" + std::string(text) + "'");
}

Format format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? Format::json : Format::csv;
}

Dataset load_dataset(std::istream& in, Format format, std::string label) {
  return format == Format::csv ? load_csv(in, std::move(label))
                               : load_json(in, std::move(label));
}

Dataset load_dataset(std::string_view text, Format format, std::string label) {
  std::istringstream in{std::string(text)};
  return load_dataset(in, format, std::move(label));
}

Dataset load_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return load_dataset(in, format_for_path(path), path.stem().string());
}

HistogramSpec make_histogram(std::span<const double> values, std::size_t bins,
                             std::vector<HistogramMarker> markers) {
  if (values.empty()) throw InvalidArgument("histogram: no values");
  if (bins < 1) throw InvalidArgument("histogram: bins must be >= 1");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!std::isfinite(*lo) || !std::isfinite(*hi))
    throw InvalidArgument("histogram: non-finite value");
  if (*lo == *hi)
    return HistogramSpec{{*lo, *hi}, {values.size()}, std::move(markers)};

  std::vector<double> edges(bins + 1);
  const double width = (*hi - *lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i)
    edges[i] = *lo + width * static_cast<double>(i);
  edges.back() = *hi;
  return make_histogram(values, std::move(edges), std::move(markers));
}

HistogramSpec make_histogram(std::span<const double> values,
                             std::vector<double> edges,
                             std::vector<HistogramMarker> markers) {
  if (values.empty()) throw InvalidArgument("histogram: no values");
  if (edges.size() < 2) throw InvalidArgument("histogram: need >= 2 edges");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!(edges[i] > edges[i - 1]))
      throw InvalidArgument("histogram: edges must be strictly increasing");

  std::vector<std::size_t> counts(edges.size() - 1, 0);
  for (double v : values) {
    if (!(v >= edges.front() && v <= edges.back()))
      throw InvalidArgument("histogram: value " + format_number(v) +
                            " outside the bin edges");
    auto it = std::upper_bound(edges.begin(), edges.end(), v);
    std::size_t bin = static_cast<std::size_t>(it - edges.begin()) - 1;
    bin = std::min(bin, counts.size() - 1);  // v == last edge
    ++counts[bin];
  }
  return HistogramSpec{std::move(edges), std::move(counts), std::move(markers)};
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw NumericError("cannot format number");
  return std::string(buf.data(), ptr);
}

Json to_json(const Dataset& d) {
  Json ms = Json::array();
  for (const auto& m : d.measurements()) {
    Json e;
    e["value"] = m.value;
    if (d.has_uncertainty()) e["uncertainty"] = m.uncertainty;
    ms.push_back(std::move(e));
  }
  Json j;
  j["label"] = d.label();
  j["unit"] = d.unit();
  j["measurements"] = std::move(ms);
  return j;
}

Dataset dataset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("measurements") ||
      !j["measurements"].is_array())
    throw ParseError("JSON dataset needs a 'measurements' array", 0);
  const auto& arr = j["measurements"];
  if (arr.empty()) throw ParseError("no measurements found", 0);
  std::vector<Measurement> rows;
  std::size_t with_unc = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    const std::string where = "measurement " + std::to_string(i);
    if (!e.is_object() || !e.contains("value") || !e["value"].is_number())
      throw ParseError(where + ": missing numeric 'value'", 0);
    Measurement m{e["value"].get<double>(), 0.0};
    if (e.contains("uncertainty")) {
      if (!e["uncertainty"].is_number())
        throw ParseError(where + ": 'uncertainty' is not a number", 0);
      m.uncertainty = e["uncertainty"].get<double>();
      if (m.uncertainty < 0.0)
        throw ParseError(where + ": negative uncertainty", 0);
      ++with_unc;
    }
    rows.push_back(m);
  }
  if (with_unc != 0 && with_unc != rows.size())
    throw ParseError("'uncertainty' must be given for all measurements or none",
                     0);
  auto text = [&](const char* key) {
    return j.contains(key) && j[key].is_string() ? j[key].get<std::string>()
                                                 : std::string{};
  };
  return Dataset(std::move(rows), text("unit"), text("label"), with_unc != 0);
}

Json to_json(const SummaryStats& s) {
  Json j;
  j["n"] = s.n;
  j["mean"] = s.mean;
  j["std_dev"] = s.std_dev ? Json(*s.std_dev) : Json(nullptr);
  j["min"] = s.min;
  j["max"] = s.max;
  return j;
}

Json to_json(const MfvResult& r) {
  Json j;
  j["mfv"] = r.m;
  j["dihesion"] = r.epsilon;
  j["sigma_mfv"] = r.sigma_m;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  return j;
}

Json to_json(const OutlierPartition& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.outliers.size(); ++i) {
    Json e;
    e["index"] = p.outlier_indices[i];
    e["value"] = p.outliers[i].value;
    e["uncertainty"] = p.outliers[i].uncertainty;
    out.push_back(std::move(e));
  }
  Json j;
  j["k"] = p.k;
  j["q1"] = p.q1;
  j["q3"] = p.q3;
  j["lower_fence"] = p.lower_fence;
  j["upper_fence"] = p.upper_fence;
  j["outliers"] = std::move(out);
  j["retained_count"] = p.retained.size();
  return j;
}

Json to_json(const TestReport& r) {
  Json j;
  j["test"] = r.test_name;
  j["statistic"] = r.statistic;
  j["p_value"] = r.p_value;
  j["n"] = r.n_a;
  if (r.n_b > 0) j["n_b"] = r.n_b;
  return j;
}

Json to_json(const BootstrapPlan& p) {
  Json j;
  j["method"] = std::string(to_string(p.method));
  j["statistic"] = std::string(to_string(p.statistic));
  j["replicates"] = p.replicates;
  j["seed"] = p.seed;
  if (p.method == BootstrapMethod::hybrid_parametric)
    j["hpb_kernel"] = std::string(to_string(p.kernel));
  return j;
}

Json to_json(const ConfidenceInterval& ci) {
  Json j;
  j["confidence"] = ci.confidence;
  j["lower"] = ci.lower;
  j["upper"] = ci.upper;
  j["method"] = ci.method_label;
  return j;
}

Json to_json(const UclResult& u) {
  Json j;
  j["method"] = u.method_label;
  j["value"] = u.value;
  j["confidence"] = u.confidence;
  j["n"] = u.n;
  j["mean"] = u.mean;
  j["std_dev"] = u.std_dev;
  return j;
}

Json to_json(const WeightedMean& w) {
  Json j;
  j["value"] = w.value;
  j["standard_error"] = w.standard_error;
  return j;
}

Json to_json(const ConservativeReport& r) {
  Json j;
  j["bootstrap_plan"] = to_json(r.bootstrap_plan);
  j["bootstrap_point_estimate"] = r.bootstrap_point_estimate;
  j["bootstrap_interval"] = to_json(r.bootstrap_interval);
  if (!r.near_zero_indices.empty())
    j["near_zero_indices"] = r.near_zero_indices;
  j["bootstrap_upper"] = to_json(r.bootstrap_upper);
  j["chebyshev"] = to_json(r.chebyshev);
  j["max_plus_2sigma"] = to_json(r.max_plus_2sigma);
  j["selected"] = to_json(r.selected);
  j["selection_rule"] = r.selection_rule;
  return j;
}

Json to_json(const InventoryInputs& in) {
  Json j;
  j["volume_m3"] = in.volume;
  j["density_kg_m3"] = in.density;
  j["concentration_bq_kg"] = in.concentration;
  j["specific_activity_bq_g"] = in.specific_activity;
  j["specific_activity_uncertainty_bq_g"] = in.specific_activity_uncertainty;
  j["exemption_threshold_g"] = in.exemption_threshold;
  return j;
}

Json to_json(const InventoryReport& r) {
  Json j;
  j["inputs"] = to_json(r.inputs);
  j["total_mass_kg"] = r.total_mass;
  j["total_activity_bq"] = r.total_activity;
  j["fissile_mass_g"] = r.fissile_mass;
  j["fissile_mass_uncertainty_g"] = r.fissile_mass_uncertainty;
  j["exempt"] = r.exempt;
  return j;
}

Json to_json(const HistogramSpec& h) {
  Json markers = Json::array();
  for (const auto& m : h.markers) {
    Json e;
    e["label"] = m.label;
    e["value"] = m.value;
    markers.push_back(std::move(e));
  }
  Json j;
  j["bin_edges"] = h.bin_edges;
  j["counts"] = h.counts;
  j["markers"] = std::move(markers);
  return j;
}

std::string write_dataset(const Dataset& d, Format format) {
  if (format == Format::json) return to_json(d).dump(2) + "\n";
  std::string out;
  if (!d.label().empty()) out += "# label: " + d.label() + "\n";
  if (!d.unit().empty()) out += "# unit: " + d.unit() + "\n";
  out += d.has_uncertainty() ? "value,uncertainty\n" : "value\n";
  for (const auto& m : d.measurements()) {
    out += format_number(m.value);
    if (d.has_uncertainty()) out += "," + format_number(m.uncertainty);
    out += "\n";
  }
  return out;
}

std::string write_histogram(const HistogramSpec& h, Format format) {
  if (format == Format::json) return to_json(h).dump(2) + "\n";
  std::string out;
  for (const auto& m : h.markers)
    out += "# marker: " + m.label + "," + format_number(m.value) + "\n";
  out += "bin_start,bin_end,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    out += format_number(h.bin_edges[i]) + "," +
           format_number(h.bin_edges[i + 1]) + "," +
           std::to_string(h.counts[i]) + "\n";
  return out;
}

std::string write_report(const Json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string out = "field,value\n";
  for (const auto& [k, v] : rows) out += csv_escape(k) + "," + csv_escape(v) + "\n";
  return out;
}

}  // namespace mfvucl
