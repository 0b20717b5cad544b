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

#include "cli.hpp"

#include <mfvucl/mfvucl.h>

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef MFVUCL_DEFAULT_CONFIG
#define MFVUCL_DEFAULT_CONFIG "isotopes.conf"
#endif

namespace mfvucl::cli {
namespace {

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(mfvucl_status status) {
  switch (status) {
    case MFVUCL_OK:
      return kExitOk;
    case MFVUCL_ERR_INVALID_ARGUMENT:
    case MFVUCL_ERR_PARSE:
      return kExitInput;
    case MFVUCL_ERR_PRECONDITION:
    case MFVUCL_ERR_NUMERIC:
      return kExitPrecondition;
    case MFVUCL_ERR_INTERNAL:
      break;
  }
  return kExitInternal;
}

void check(mfvucl_status status) {
  if (status != MFVUCL_OK) throw Failure{exit_code_for(status), mfvucl_last_error()};
}

[[noreturn]] void input_error(std::string message) {
  throw Failure{kExitInput, std::move(message)};
}

struct DatasetDeleter {
  void operator()(mfvucl_dataset* p) const { mfvucl_dataset_destroy(p); }
};
struct PartitionDeleter {
  void operator()(mfvucl_partition* p) const { mfvucl_partition_destroy(p); }
};
struct DistributionDeleter {
  void operator()(mfvucl_distribution* p) const { mfvucl_distribution_destroy(p); }
};
struct HistogramDeleter {
  void operator()(mfvucl_histogram* p) const { mfvucl_histogram_destroy(p); }
};
struct StringDeleter {
  void operator()(char* p) const { mfvucl_string_free(p); }
};

using DatasetPtr = std::unique_ptr<mfvucl_dataset, DatasetDeleter>;
using PartitionPtr = std::unique_ptr<mfvucl_partition, PartitionDeleter>;
using DistributionPtr = std::unique_ptr<mfvucl_distribution, DistributionDeleter>;
using HistogramPtr = std::unique_ptr<mfvucl_histogram, HistogramDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string input;
  std::string input_b;
  std::string format = "json";
  std::string out_path;

  std::uint64_t seed = 0;
  std::size_t replicates = 210000;
  double confidence = 0.9545;
  double alpha = 0.0455;
  unsigned threads = 0;
  std::string boot_method = "nonparametric";
  std::string ucl_method = "conservative";
  std::string statistic = "mfv";
  std::string kernel = "resample_perturb";

  std::string outliers = "report";
  double k = 1.5;

  double volume = 0.0;
  double density = 0.0;
  double concentration = 0.0;
  std::string isotope = "U-235";
  std::string config;
  double specific_activity = 0.0;
  double specific_activity_uncertainty = 0.0;
  double threshold = 100.0;

  std::size_t hist_bins = 0;
  std::size_t bins = 10;
  std::vector<double> edges;
  std::string of = "data";

  double tol = 1e-9;
  int max_iter = 1000;
};

mfvucl_format output_format(const Options& o) {
  return o.format == "csv" ? MFVUCL_FORMAT_CSV : MFVUCL_FORMAT_JSON;
}

void emit(const Options& o, const char* text, std::ostream& out) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body.push_back('\n');
  if (o.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) input_error("cannot open '" + o.out_path + "' for writing");
  file << body;
  if (!file) input_error("failed writing '" + o.out_path + "'");
}

DatasetPtr load(const std::string& path) {
  mfvucl_dataset* raw = nullptr;
  check(mfvucl_dataset_load_file(path.c_str(), &raw));
  return DatasetPtr(raw);
}

double resolve_confidence(const CLI::App& sub, const Options& o) {
  const bool has_conf = sub.count("--confidence") > 0;
  const bool has_alpha = sub.count("--alpha") > 0;
  if (has_conf && has_alpha) {
    if (std::abs(o.alpha - (1.0 - o.confidence)) > 1e-9)
      input_error("--alpha must equal 1 - --confidence when both are given");
    return o.confidence;
  }
  if (has_alpha) return 1.0 - o.alpha;
  return o.confidence;
}

std::uint64_t resolve_seed(const CLI::App& sub, const Options& o,
                           bool* generated) {
  if (sub.count("--seed") > 0) {
    *generated = false;
    return o.seed;
  }
  std::random_device rd;
  *generated = true;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

mfvucl_bootstrap_plan make_plan(const CLI::App& sub, const Options& o,
                                bool* seed_generated) {
  mfvucl_bootstrap_plan plan;
  mfvucl_bootstrap_plan_default(&plan);
  plan.method = (o.boot_method == "hpb" || o.boot_method == "hybrid_parametric")
                    ? MFVUCL_BOOT_HYBRID_PARAMETRIC
                    : MFVUCL_BOOT_NONPARAMETRIC;
  plan.statistic = o.statistic == "mean" ? MFVUCL_STAT_MEAN : MFVUCL_STAT_MFV;
  plan.kernel = o.kernel == "per_element" ? MFVUCL_HPB_PER_ELEMENT
                                          : MFVUCL_HPB_RESAMPLE_PERTURB;
  plan.replicates = o.replicates;
  plan.threads = o.threads;
  plan.seed = resolve_seed(sub, o, seed_generated);
  return plan;
}

// ---- isotope configuration

struct IsotopeEntry {
  std::optional<double> specific_activity;
  std::optional<double> specific_activity_uncertainty;
  std::optional<double> exemption_threshold;
};

using IsotopeTable = std::map<std::string, IsotopeEntry>;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<IsotopeTable> read_config(const std::string& path, bool required) {
  std::ifstream in(path);
  if (!in) {
    if (required) input_error("cannot open config '" + path + "'");
    return std::nullopt;
  }
  IsotopeTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto where = path + ":" + std::to_string(line_no) + ": ";
    const auto eq = text.find('=');
    if (eq == std::string::npos) input_error(where + "expected 'isotope.key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    const auto dot = key.rfind('.');
    if (dot == std::string::npos || dot == 0)
      input_error(where + "expected 'isotope.key = value'");
    double number = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), number);
    if (ec != std::errc() || ptr != value.data() + value.size() ||
        !std::isfinite(number))
      input_error(where + "invalid number '" + value + "'");
    auto& entry = table[key.substr(0, dot)];
    const std::string field = key.substr(dot + 1);
    if (field == "specific_activity") {
      entry.specific_activity = number;
    } else if (field == "specific_activity_uncertainty") {
      entry.specific_activity_uncertainty = number;
    } else if (field == "exemption_threshold") {
      entry.exemption_threshold = number;
    } else {
      input_error(where + "unknown key '" + field + "'");
    }
  }
  return table;
}

struct IsotopeConstants {
  double specific_activity;
  double specific_activity_uncertainty;
  double exemption_threshold;
};

IsotopeConstants resolve_constants(const CLI::App& sub, const Options& o) {
  std::string path = o.config;
  bool explicit_path = sub.count("--config") > 0;
  if (!explicit_path) {
    if (const char* env = std::getenv("MFVUCL_CONFIG"); env && *env) {
      path = env;
      explicit_path = true;
    } else {
      path = MFVUCL_DEFAULT_CONFIG;
    }
  }
  const bool have_sa = sub.count("--specific-activity") > 0;
  const auto table = read_config(path, explicit_path || !have_sa);
  IsotopeEntry entry;
  if (table) {
    if (auto it = table->find(o.isotope); it != table->end()) {
      entry = it->second;
    } else if (!have_sa) {
      input_error("isotope '" + o.isotope + "' not found in '" + path + "'");
    }
  }
  IsotopeConstants c{};
  c.specific_activity = have_sa ? o.specific_activity : *entry.specific_activity;
  if (!have_sa && !entry.specific_activity)
    input_error("no specific_activity for '" + o.isotope + "'");
  c.specific_activity_uncertainty =
      sub.count("--specific-activity-uncertainty") > 0
          ? o.specific_activity_uncertainty
          : entry.specific_activity_uncertainty.value_or(0.0);
  c.exemption_threshold = sub.count("--threshold") > 0
                              ? o.threshold
                              : entry.exemption_threshold.value_or(100.0);
  return c;
}

// ---- option groups

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
}

void add_confidence(CLI::App* sub, Options& o) {
  sub->add_option("--confidence", o.confidence, "Confidence level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--alpha", o.alpha,
                  "Significance level; must equal 1 - confidence if both are given")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

void add_bootstrap(CLI::App* sub, Options& o, bool with_method) {
  sub->add_option("--seed", o.seed,
                  "Random seed (default: generated and echoed in the report)");
  sub->add_option("--replicates", o.replicates, "Bootstrap replicates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--threads", o.threads,
                  "Worker threads; 0 uses all cores. Never changes results")
      ->capture_default_str();
  sub->add_option("--statistic", o.statistic, "Bootstrapped statistic")
      ->check(CLI::IsMember({"mfv", "mean"}))
      ->capture_default_str();
  sub->add_option("--kernel", o.kernel, "Hybrid parametric sampling kernel")
      ->check(CLI::IsMember({"resample_perturb", "per_element"}))
      ->capture_default_str();
  if (with_method) {
    sub->add_option("--method", o.boot_method, "Bootstrap method")
        ->check(CLI::IsMember({"nonparametric", "hpb", "hybrid_parametric"}))
        ->capture_default_str();
  }
}

void add_isotope(CLI::App* sub, Options& o) {
  sub->add_option("--isotope", o.isotope, "Isotope whose constants are used")
      ->capture_default_str();
  sub->add_option("--config", o.config,
                  "Isotope constants file (default: $MFVUCL_CONFIG, else " +
                      std::string(MFVUCL_DEFAULT_CONFIG) + ")");
  sub->add_option("--specific-activity", o.specific_activity,
                  "Override the specific activity, Bq/g");
  sub->add_option("--specific-activity-uncertainty",
                  o.specific_activity_uncertainty,
                  "Override the specific-activity uncertainty, Bq/g");
  sub->add_option("--threshold", o.threshold,
                  "Override the exemption threshold, g (config default 100)");
}

// ---- commands

void cmd_analyze(const CLI::App& sub, const Options& o, std::ostream& out) {
  auto ds = load(o.input);
  mfvucl_analysis_options opt;
  mfvucl_analysis_options_default(&opt);
  opt.confidence = resolve_confidence(sub, o);
  bool generated = false;
  opt.plan = make_plan(sub, o, &generated);
  opt.seed_generated = generated ? 1 : 0;
  opt.outlier_k = o.k;
  opt.exclude_outliers = o.outliers == "exclude" ? 1 : 0;
  opt.histogram_bins = o.hist_bins;
  const bool has_volume = sub.count("--volume") > 0;
  const bool has_density = sub.count("--density") > 0;
  if (has_volume != has_density)
    input_error("--volume and --density must be given together");
  if (has_volume) {
    const auto c = resolve_constants(sub, o);
    opt.with_inventory = 1;
    opt.volume = o.volume;
    opt.density = o.density;
    opt.specific_activity = c.specific_activity;
    opt.specific_activity_uncertainty = c.specific_activity_uncertainty;
    opt.exemption_threshold = c.exemption_threshold;
    opt.isotope = o.isotope.c_str();
  }
  char* text = nullptr;
  check(mfvucl_analyze(ds.get(), &opt, output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

void cmd_mfv(const Options& o, std::ostream& out) {
  auto ds = load(o.input);
  mfvucl_mfv_config cfg;
  mfvucl_mfv_config_default(&cfg);
  cfg.tol_m = o.tol;
  cfg.tol_eps = o.tol;
  cfg.max_iter = o.max_iter;
  char* text = nullptr;
  check(mfvucl_mfv_write(ds.get(), &cfg, output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

void cmd_bootstrap(const CLI::App& sub, const Options& o, std::ostream& out) {
  auto ds = load(o.input);
  const double confidence = resolve_confidence(sub, o);
  bool generated = false;
  const auto plan = make_plan(sub, o, &generated);
  mfvucl_distribution* raw = nullptr;
  check(mfvucl_bootstrap(ds.get(), &plan, &raw));
  DistributionPtr dist(raw);
  char* text = nullptr;
  check(mfvucl_distribution_write(dist.get(), confidence, output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

void cmd_ucl(const CLI::App& sub, const Options& o, std::ostream& out) {
  auto ds = load(o.input);
  const double confidence = resolve_confidence(sub, o);
  char* text = nullptr;
  if (o.ucl_method == "conservative") {
    bool generated = false;
    const auto plan = make_plan(sub, o, &generated);
    check(mfvucl_conservative_upper_bound_write(ds.get(), confidence, &plan,
                                                output_format(o), &text));
  } else {
    check(mfvucl_ucl_write(ds.get(), o.ucl_method.c_str(), 1.0 - confidence,
                           output_format(o), &text));
  }
  emit(o, StringPtr(text).get(), out);
}

void cmd_outliers(const Options& o, std::ostream& out) {
  auto ds = load(o.input);
  mfvucl_partition* raw = nullptr;
  check(mfvucl_iqr_partition(ds.get(), o.k, &raw));
  PartitionPtr part(raw);
  char* text = nullptr;
  check(mfvucl_partition_write(part.get(), output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

void cmd_normality(const Options& o, std::ostream& out) {
  auto ds = load(o.input);
  char* text = nullptr;
  check(mfvucl_shapiro_wilk_write(ds.get(), output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

void cmd_ks(const Options& o, std::ostream& out) {
  auto a = load(o.input);
  auto b = load(o.input_b);
  char* text = nullptr;
  check(mfvucl_ks_two_sample_write(a.get(), b.get(), output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

void cmd_inventory(const CLI::App& sub, const Options& o, std::ostream& out) {
  const auto c = resolve_constants(sub, o);
  const mfvucl_inventory_inputs in{o.volume,
                                   o.density,
                                   o.concentration,
                                   c.specific_activity,
                                   c.specific_activity_uncertainty,
                                   c.exemption_threshold};
  char* text = nullptr;
  check(mfvucl_estimate_inventory_write(&in, output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

void cmd_histogram(const CLI::App& sub, const Options& o, std::ostream& out) {
  auto ds = load(o.input);
  std::vector<double> values;
  std::vector<mfvucl_marker> markers;
  if (o.of == "bootstrap") {
    const double confidence = resolve_confidence(sub, o);
    bool generated = false;
    const auto plan = make_plan(sub, o, &generated);
    mfvucl_distribution* raw = nullptr;
    check(mfvucl_bootstrap(ds.get(), &plan, &raw));
    DistributionPtr dist(raw);
    const double* v = mfvucl_distribution_values(dist.get());
    values.assign(v, v + mfvucl_distribution_size(dist.get()));
    mfvucl_interval ci;
    check(mfvucl_percentile_interval(dist.get(), confidence, &ci));
    markers = {{"point_estimate", mfvucl_distribution_point_estimate(dist.get())},
               {"lower", ci.lower},
               {"upper", ci.upper}};
  } else {
    const std::size_t n = mfvucl_dataset_size(ds.get());
    values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      check(mfvucl_dataset_get(ds.get(), i, &values[i], nullptr));
  }
  mfvucl_histogram* raw = nullptr;
  if (!o.edges.empty()) {
    check(mfvucl_histogram_create_with_edges(values.data(), values.size(),
                                             o.edges.data(), o.edges.size(),
                                             markers.data(), markers.size(), &raw));
  } else {
    check(mfvucl_histogram_create(values.data(), values.size(), o.bins,
                                  markers.data(), markers.size(), &raw));
  }
  HistogramPtr hist(raw);
  char* text = nullptr;
  check(mfvucl_histogram_write(hist.get(), output_format(o), &text));
  emit(o, StringPtr(text).get(), out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Robust central values, bootstrap intervals and conservative "
               "upper bounds for radionuclide concentration data",
               "mfvucl"};
  app.set_version_flag("--version", std::string(mfvucl_version()));
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand(
      "analyze", "Full pipeline: summary, outliers, normality, MFV, conservative "
                 "bound and optional inventory");
  analyze->add_option("input", o.input, "Dataset file (.csv or .json)")->required();
  add_confidence(analyze, o);
  add_bootstrap(analyze, o, false);
  analyze->add_option("--outliers", o.outliers,
                      "report: flag outliers only; exclude: analyze retained values")
      ->check(CLI::IsMember({"report", "exclude"}))
      ->capture_default_str();
  analyze->add_option("--k", o.k, "Tukey fence multiplier")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--volume", o.volume, "Waste volume, m^3 (enables inventory)");
  analyze->add_option("--density", o.density, "Bulk density, kg/m^3 (enables inventory)");
  add_isotope(analyze, o);
  analyze->add_option("--hist-bins", o.hist_bins,
                      "Bins of the bootstrap histogram in the report; 0 omits it")
      ->capture_default_str();
  add_output(analyze, o);

  auto* mfv = app.add_subcommand("mfv", "Most frequent value and its standard error");
  mfv->add_option("input", o.input, "Dataset file (.csv or .json)")->required();
  mfv->add_option("--tol", o.tol, "Absolute convergence tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mfv->add_option("--max-iter", o.max_iter, "Iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(mfv, o);

  auto* boot = app.add_subcommand("bootstrap", "Bootstrap percentile interval");
  boot->add_option("input", o.input, "Dataset file (.csv or .json)")->required();
  add_confidence(boot, o);
  add_bootstrap(boot, o, true);
  add_output(boot, o);

  auto* ucl = app.add_subcommand("ucl", "Upper confidence limit");
  ucl->add_option("input", o.input, "Dataset file (.csv or .json)")->required();
  add_confidence(ucl, o);
  add_bootstrap(ucl, o, false);
  ucl->add_option("--method", o.ucl_method, "UCL method")
      ->check(CLI::IsMember(
          {"conservative", "chebyshev", "max_plus_2sigma", "weighted_mean"}))
      ->capture_default_str();
  add_output(ucl, o);

  auto* outliers = app.add_subcommand("outliers", "Tukey IQR outlier screen");
  outliers->add_option("input", o.input, "Dataset file (.csv or .json)")->required();
  outliers->add_option("--k", o.k, "Tukey fence multiplier")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(outliers, o);

  auto* normality = app.add_subcommand("normality", "Shapiro-Wilk normality test");
  normality->add_option("input", o.input, "Dataset file (.csv or .json)")->required();
  add_output(normality, o);

  auto* ks = app.add_subcommand("ks", "Two-sample Kolmogorov-Smirnov test");
  ks->add_option("first", o.input, "First dataset file")->required();
  ks->add_option("second", o.input_b, "Second dataset file")->required();
  add_output(ks, o);

  auto* inventory = app.add_subcommand("inventory", "Fissile mass and exemption check");
  inventory->add_option("--volume", o.volume, "Waste volume, m^3")->required();
  inventory->add_option("--density", o.density, "Bulk density, kg/m^3")->required();
  inventory->add_option("--concentration", o.concentration,
                        "Activity concentration, Bq/kg")
      ->required();
  add_isotope(inventory, o);
  add_output(inventory, o);

  auto* histogram = app.add_subcommand("histogram", "Histogram export");
  histogram->add_option("input", o.input, "Dataset file (.csv or .json)")->required();
  histogram->add_option("--of", o.of,
                        "data: the measurements; bootstrap: replicate statistics "
                        "with point estimate and interval markers")
      ->check(CLI::IsMember({"data", "bootstrap"}))
      ->capture_default_str();
  histogram->add_option("--bins", o.bins, "Number of equal-width bins")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  histogram->add_option("--edges", o.edges,
                        "Explicit bin edges (overrides --bins)")
      ->delimiter(',');
  add_confidence(histogram, o);
  add_bootstrap(histogram, o, true);
  add_output(histogram, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) {
      cmd_analyze(*analyze, o, out);
    } else if (*mfv) {
      cmd_mfv(o, out);
    } else if (*boot) {
      cmd_bootstrap(*boot, o, out);
    } else if (*ucl) {
      cmd_ucl(*ucl, o, out);
    } else if (*outliers) {
      cmd_outliers(o, out);
    } else if (*normality) {
      cmd_normality(o, out);
    } else if (*ks) {
      cmd_ks(o, out);
    } else if (*inventory) {
      cmd_inventory(*inventory, o, out);
    } else if (*histogram) {
      cmd_histogram(*histogram, o, out);
    }
  } catch (const Failure& f) {
    err << "mfvucl: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    err << "mfvucl: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace mfvucl::cli
