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

#include "mfvucl/mfvucl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "mfvucl/analysis.hpp"
#include "mfvucl/fixtures.hpp"

using namespace mfvucl;

struct mfvucl_dataset {
  Dataset data;
};

struct mfvucl_partition {
  OutlierPartition partition;
  mfvucl_dataset retained;
};

struct mfvucl_distribution {
  BootstrapDistribution dist;
};

struct mfvucl_histogram {
  HistogramSpec spec;
};

namespace {

thread_local std::string g_last_error;

mfvucl_status fail(mfvucl_status status, const char* where, const char* what) {
  g_last_error = std::string(where) + ": " + what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
mfvucl_status guarded(const char* where, Body&& body) noexcept {
  try {
    body();
    return MFVUCL_OK;
  } catch (const ParseError& e) {
    return fail(MFVUCL_ERR_PARSE, where, e.what());
  } catch (const PreconditionError& e) {
    return fail(MFVUCL_ERR_PRECONDITION, where, e.what());
  } catch (const NumericError& e) {
    return fail(MFVUCL_ERR_NUMERIC, where, e.what());
  } catch (const InvalidArgument& e) {
    return fail(MFVUCL_ERR_INVALID_ARGUMENT, where, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MFVUCL_ERR_INTERNAL, where, "out of memory");
  } catch (const std::exception& e) {
    return fail(MFVUCL_ERR_INTERNAL, where, e.what());
  } catch (...) {
    return fail(MFVUCL_ERR_INTERNAL, where, "unknown error");
  }
}

template <typename T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw InvalidArgument(std::string(name) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format to_format(mfvucl_format f) {
  switch (f) {
    case MFVUCL_FORMAT_CSV:
      return Format::csv;
    case MFVUCL_FORMAT_JSON:
      return Format::json;
  }
  throw InvalidArgument("unknown format");
}

MfvConfig to_config(const mfvucl_mfv_config* c) {
  MfvConfig cfg;
  if (c != nullptr) cfg = MfvConfig{c->tol_m, c->tol_eps, c->max_iter};
  return cfg;
}

BootstrapPlan to_plan(const mfvucl_bootstrap_plan* p) {
  BootstrapPlan plan;
  if (p == nullptr) return plan;
  switch (p->method) {
    case MFVUCL_BOOT_NONPARAMETRIC:
      plan.method = BootstrapMethod::nonparametric;
      break;
    case MFVUCL_BOOT_HYBRID_PARAMETRIC:
      plan.method = BootstrapMethod::hybrid_parametric;
      break;
    default:
      throw InvalidArgument("unknown bootstrap method");
  }
  switch (p->statistic) {
    case MFVUCL_STAT_MFV:
      plan.statistic = StatisticKind::mfv;
      break;
    case MFVUCL_STAT_MEAN:
      plan.statistic = StatisticKind::mean;
      break;
    default:
      throw InvalidArgument("unknown statistic");
  }
  switch (p->kernel) {
    case MFVUCL_HPB_RESAMPLE_PERTURB:
      plan.kernel = HpbKernel::resample_perturb;
      break;
    case MFVUCL_HPB_PER_ELEMENT:
      plan.kernel = HpbKernel::per_element;
      break;
    default:
      throw InvalidArgument("unknown HPB kernel");
  }
  plan.replicates = p->replicates;
  plan.seed = p->seed;
  plan.threads = p->threads;
  return plan;
}

mfvucl_ucl to_c(const UclResult& u) {
  return mfvucl_ucl{u.value, u.confidence, u.n, u.mean, u.std_dev};
}

mfvucl_interval to_c(const ConfidenceInterval& ci) {
  return mfvucl_interval{ci.lower, ci.upper, ci.confidence};
}

std::vector<HistogramMarker> to_markers(const mfvucl_marker* markers,
                                        std::size_t n) {
  std::vector<HistogramMarker> out;
  if (n > 0) require(markers, "markers");
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({markers[i].label ? markers[i].label : "", markers[i].value});
  return out;
}

void emit(const std::string& text, char** out) {
  require(out, "out");
  *out = dup_string(text);
}

}  // namespace

extern "C" {

const char* mfvucl_version(void) { return "0.1.0"; }

const char* mfvucl_last_error(void) { return g_last_error.c_str(); }

const char* mfvucl_status_name(mfvucl_status status) {
  switch (status) {
    case MFVUCL_OK:
      return "ok";
    case MFVUCL_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case MFVUCL_ERR_PARSE:
      return "parse_error";
    case MFVUCL_ERR_PRECONDITION:
      return "precondition_violated";
    case MFVUCL_ERR_NUMERIC:
      return "numeric_error";
    case MFVUCL_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

void mfvucl_string_free(char* s) { std::free(s); }

// ---- datasets

mfvucl_status mfvucl_dataset_create(const double* values,
                                    const double* uncertainties, size_t n,
                                    const char* unit, const char* label,
                                    mfvucl_dataset** out) {
  return guarded("mfvucl_dataset_create", [&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    std::vector<Measurement> ms(n);
    for (size_t i = 0; i < n; ++i)
      ms[i] = {values[i], uncertainties ? uncertainties[i] : 0.0};
    *out = new mfvucl_dataset{Dataset(std::move(ms), unit ? unit : "",
                                      label ? label : "",
                                      uncertainties != nullptr)};
  });
}

mfvucl_status mfvucl_dataset_parse(const char* text, size_t length,
                                   mfvucl_format format, mfvucl_dataset** out) {
  return guarded("mfvucl_dataset_parse", [&] {
    require(out, "out");
    if (length > 0) require(text, "text");
    *out = new mfvucl_dataset{load_dataset(std::string_view(text ? text : "", length),
                                           to_format(format))};
  });
}

mfvucl_status mfvucl_dataset_load_file(const char* path, mfvucl_dataset** out) {
  return guarded("mfvucl_dataset_load_file", [&] {
    require(out, "out");
    require(path, "path");
    *out = new mfvucl_dataset{load_dataset_file(path)};
  });
}

mfvucl_status mfvucl_dataset_load_fixture(const char* name,
                                          mfvucl_dataset** out) {
  return guarded("mfvucl_dataset_load_fixture", [&] {
    require(out, "out");
    require(name, "name");
    *out = new mfvucl_dataset{load_fixture(name)};
  });
}

void mfvucl_dataset_destroy(mfvucl_dataset* dataset) { delete dataset; }

size_t mfvucl_dataset_size(const mfvucl_dataset* dataset) {
  return dataset ? dataset->data.size() : 0;
}

mfvucl_status mfvucl_dataset_get(const mfvucl_dataset* dataset, size_t index,
                                 double* value, double* uncertainty) {
  return guarded("mfvucl_dataset_get", [&] {
    require(dataset, "dataset");
    if (index >= dataset->data.size())
      throw InvalidArgument("index out of range");
    const auto& m = dataset->data.measurements()[index];
    if (value) *value = m.value;
    if (uncertainty) *uncertainty = m.uncertainty;
  });
}

int mfvucl_dataset_has_uncertainty(const mfvucl_dataset* dataset) {
  return dataset && dataset->data.has_uncertainty() ? 1 : 0;
}

const char* mfvucl_dataset_unit(const mfvucl_dataset* dataset) {
  return dataset ? dataset->data.unit().c_str() : "";
}

const char* mfvucl_dataset_label(const mfvucl_dataset* dataset) {
  return dataset ? dataset->data.label().c_str() : "";
}

mfvucl_status mfvucl_dataset_write(const mfvucl_dataset* dataset,
                                   mfvucl_format format, char** out) {
  return guarded("mfvucl_dataset_write", [&] {
    require(dataset, "dataset");
    emit(write_dataset(dataset->data, to_format(format)), out);
  });
}

// ---- summary

mfvucl_status mfvucl_summarize(const mfvucl_dataset* dataset,
                               mfvucl_summary* out) {
  return guarded("mfvucl_summarize", [&] {
    require(dataset, "dataset");
    require(out, "out");
    const auto s = summarize(dataset->data);
    *out = mfvucl_summary{s.n, s.mean, s.std_dev.value_or(0.0),
                          s.std_dev ? 1 : 0, s.min, s.max};
  });
}

// ---- MFV

void mfvucl_mfv_config_default(mfvucl_mfv_config* config) {
  if (config == nullptr) return;
  const MfvConfig d;
  *config = mfvucl_mfv_config{d.tol_m, d.tol_eps, d.max_iter};
}

mfvucl_status mfvucl_mfv_fit(const mfvucl_dataset* dataset,
                             const mfvucl_mfv_config* config,
                             mfvucl_mfv_result* out) {
  return guarded("mfvucl_mfv_fit", [&] {
    require(dataset, "dataset");
    require(out, "out");
    const auto r = mfv_fit(dataset->data, to_config(config));
    *out = mfvucl_mfv_result{r.m, r.epsilon, r.sigma_m, r.iterations,
                             r.converged ? 1 : 0};
  });
}

mfvucl_status mfvucl_initial_dihesion(const mfvucl_dataset* dataset,
                                      double* out) {
  return guarded("mfvucl_initial_dihesion", [&] {
    require(dataset, "dataset");
    require(out, "out");
    *out = initial_dihesion(dataset->data);
  });
}

mfvucl_status mfvucl_mfv_variance(const mfvucl_dataset* dataset, double m,
                                  double epsilon, double* out) {
  return guarded("mfvucl_mfv_variance", [&] {
    require(dataset, "dataset");
    require(out, "out");
    *out = mfv_variance(dataset->data, m, epsilon);
  });
}

// ---- outliers

mfvucl_status mfvucl_iqr_partition(const mfvucl_dataset* dataset, double k,
                                   mfvucl_partition** out) {
  return guarded("mfvucl_iqr_partition", [&] {
    require(dataset, "dataset");
    require(out, "out");
    auto p = iqr_partition(dataset->data, k);
    auto retained = p.retained;
    *out = new mfvucl_partition{std::move(p), mfvucl_dataset{std::move(retained)}};
  });
}

void mfvucl_partition_destroy(mfvucl_partition* partition) { delete partition; }

void mfvucl_partition_fences(const mfvucl_partition* partition,
                             mfvucl_fences* out) {
  if (partition == nullptr || out == nullptr) return;
  const auto& p = partition->partition;
  *out = mfvucl_fences{p.q1, p.q3, p.lower_fence, p.upper_fence, p.k};
}

size_t mfvucl_partition_outlier_count(const mfvucl_partition* partition) {
  return partition ? partition->partition.outlier_indices.size() : 0;
}

mfvucl_status mfvucl_partition_outlier_index(const mfvucl_partition* partition,
                                             size_t i, size_t* out) {
  return guarded("mfvucl_partition_outlier_index", [&] {
    require(partition, "partition");
    require(out, "out");
    const auto& idx = partition->partition.outlier_indices;
    if (i >= idx.size()) throw InvalidArgument("index out of range");
    *out = idx[i];
  });
}

const mfvucl_dataset* mfvucl_partition_retained(const mfvucl_partition* partition) {
  return partition ? &partition->retained : nullptr;
}

// ---- distribution tests

mfvucl_status mfvucl_shapiro_wilk(const double* values, size_t n,
                                  mfvucl_test_report* out) {
  return guarded("mfvucl_shapiro_wilk", [&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    const auto r = shapiro_wilk(std::span<const double>(values, n));
    *out = mfvucl_test_report{r.statistic, r.p_value, r.n_a, r.n_b};
  });
}

mfvucl_status mfvucl_ks_two_sample(const double* a, size_t n_a, const double* b,
                                   size_t n_b, mfvucl_test_report* out) {
  return guarded("mfvucl_ks_two_sample", [&] {
    require(out, "out");
    if (n_a > 0) require(a, "a");
    if (n_b > 0) require(b, "b");
    const auto r = ks_two_sample(std::span<const double>(a, n_a),
                                 std::span<const double>(b, n_b));
    *out = mfvucl_test_report{r.statistic, r.p_value, r.n_a, r.n_b};
  });
}

// ---- bootstrap

void mfvucl_bootstrap_plan_default(mfvucl_bootstrap_plan* plan) {
  if (plan == nullptr) return;
  const BootstrapPlan d;
  *plan = mfvucl_bootstrap_plan{MFVUCL_BOOT_NONPARAMETRIC, MFVUCL_STAT_MFV,
                                MFVUCL_HPB_RESAMPLE_PERTURB, d.replicates,
                                d.seed, d.threads};
}

mfvucl_status mfvucl_bootstrap(const mfvucl_dataset* dataset,
                               const mfvucl_bootstrap_plan* plan,
                               mfvucl_distribution** out) {
  return guarded("mfvucl_bootstrap", [&] {
    require(dataset, "dataset");
    require(plan, "plan");
    require(out, "out");
    *out = new mfvucl_distribution{run_bootstrap(dataset->data, to_plan(plan))};
  });
}

void mfvucl_distribution_destroy(mfvucl_distribution* dist) { delete dist; }

size_t mfvucl_distribution_size(const mfvucl_distribution* dist) {
  return dist ? dist->dist.values.size() : 0;
}

const double* mfvucl_distribution_values(const mfvucl_distribution* dist) {
  return dist ? dist->dist.values.data() : nullptr;
}

double mfvucl_distribution_point_estimate(const mfvucl_distribution* dist) {
  return dist ? dist->dist.point_estimate : 0.0;
}

mfvucl_status mfvucl_percentile_interval(const mfvucl_distribution* dist,
                                         double confidence,
                                         mfvucl_interval* out) {
  return guarded("mfvucl_percentile_interval", [&] {
    require(dist, "dist");
    require(out, "out");
    *out = to_c(percentile_interval(dist->dist, confidence));
  });
}

mfvucl_status mfvucl_distribution_write(const mfvucl_distribution* dist,
                                        double confidence, mfvucl_format format,
                                        char** out) {
  return guarded("mfvucl_distribution_write", [&] {
    require(dist, "dist");
    Json j;
    j["plan"] = to_json(dist->dist.plan);
    j["point_estimate"] = dist->dist.point_estimate;
    j["interval"] = to_json(percentile_interval(dist->dist, confidence));
    if (!dist->dist.near_zero_indices.empty())
      j["near_zero_indices"] = dist->dist.near_zero_indices;
    emit(write_report(j, to_format(format)), out);
  });
}

// ---- UCL

mfvucl_status mfvucl_chebyshev_ucl(const mfvucl_dataset* dataset, double alpha,
                                   mfvucl_ucl* out) {
  return guarded("mfvucl_chebyshev_ucl", [&] {
    require(dataset, "dataset");
    require(out, "out");
    *out = to_c(chebyshev_ucl(summarize(dataset->data), alpha));
  });
}

mfvucl_status mfvucl_max_plus_2sigma(const mfvucl_dataset* dataset,
                                     mfvucl_ucl* out) {
  return guarded("mfvucl_max_plus_2sigma", [&] {
    require(dataset, "dataset");
    require(out, "out");
    *out = to_c(max_plus_2sigma(dataset->data));
  });
}

mfvucl_status mfvucl_weighted_mean(const mfvucl_dataset* dataset, double* value,
                                   double* standard_error) {
  return guarded("mfvucl_weighted_mean", [&] {
    require(dataset, "dataset");
    const auto w = weighted_mean(dataset->data);
    if (value) *value = w.value;
    if (standard_error) *standard_error = w.standard_error;
  });
}

mfvucl_status mfvucl_conservative_upper_bound(const mfvucl_dataset* dataset,
                                              double confidence,
                                              const mfvucl_bootstrap_plan* plan,
                                              mfvucl_conservative* out) {
  return guarded("mfvucl_conservative_upper_bound", [&] {
    require(dataset, "dataset");
    require(out, "out");
    const auto r = conservative_upper_bound(dataset->data, confidence, to_plan(plan));
    int selected = 0;
    if (r.selected.method_label == r.chebyshev.method_label) selected = 1;
    if (r.selected.method_label == r.max_plus_2sigma.method_label) selected = 2;
    *out = mfvucl_conservative{
        to_c(r.bootstrap_upper),
        to_c(r.bootstrap_interval),
        r.bootstrap_plan.method == BootstrapMethod::nonparametric
            ? MFVUCL_BOOT_NONPARAMETRIC
            : MFVUCL_BOOT_HYBRID_PARAMETRIC,
        to_c(r.chebyshev),
        to_c(r.max_plus_2sigma),
        to_c(r.selected),
        selected};
  });
}

mfvucl_status mfvucl_conservative_upper_bound_write(
    const mfvucl_dataset* dataset, double confidence,
    const mfvucl_bootstrap_plan* plan, mfvucl_format format, char** out) {
  return guarded("mfvucl_conservative_upper_bound_write", [&] {
    require(dataset, "dataset");
    const auto r = conservative_upper_bound(dataset->data, confidence, to_plan(plan));
    emit(write_report(to_json(r), to_format(format)), out);
  });
}

// ---- inventory

namespace {
InventoryInputs to_inputs(const mfvucl_inventory_inputs* in) {
  require(in, "inputs");
  return InventoryInputs{in->volume,
                         in->density,
                         in->concentration,
                         in->specific_activity,
                         in->specific_activity_uncertainty,
                         in->exemption_threshold};
}
}  // namespace

mfvucl_status mfvucl_estimate_inventory(const mfvucl_inventory_inputs* inputs,
                                        mfvucl_inventory* out) {
  return guarded("mfvucl_estimate_inventory", [&] {
    require(out, "out");
    const auto r = estimate_inventory(to_inputs(inputs));
    *out = mfvucl_inventory{r.total_mass, r.total_activity, r.fissile_mass,
                            r.fissile_mass_uncertainty, r.exempt ? 1 : 0};
  });
}

mfvucl_status mfvucl_estimate_inventory_write(
    const mfvucl_inventory_inputs* inputs, mfvucl_format format, char** out) {
  return guarded("mfvucl_estimate_inventory_write", [&] {
    const auto r = estimate_inventory(to_inputs(inputs));
    emit(write_report(to_json(r), to_format(format)), out);
  });
}

// ---- histograms

mfvucl_status mfvucl_histogram_create(const double* values, size_t n,
                                      size_t bins, const mfvucl_marker* markers,
                                      size_t n_markers, mfvucl_histogram** out) {
  return guarded("mfvucl_histogram_create", [&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    *out = new mfvucl_histogram{make_histogram(
        std::span<const double>(values, n), bins, to_markers(markers, n_markers))};
  });
}

mfvucl_status mfvucl_histogram_create_with_edges(
    const double* values, size_t n, const double* edges, size_t n_edges,
    const mfvucl_marker* markers, size_t n_markers, mfvucl_histogram** out) {
  return guarded("mfvucl_histogram_create_with_edges", [&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    if (n_edges > 0) require(edges, "edges");
    *out = new mfvucl_histogram{make_histogram(
        std::span<const double>(values, n),
        std::vector<double>(edges, edges + n_edges),
        to_markers(markers, n_markers))};
  });
}

void mfvucl_histogram_destroy(mfvucl_histogram* histogram) { delete histogram; }

size_t mfvucl_histogram_bin_count(const mfvucl_histogram* histogram) {
  return histogram ? histogram->spec.counts.size() : 0;
}

mfvucl_status mfvucl_histogram_bin(const mfvucl_histogram* histogram, size_t i,
                                   double* start, double* end, size_t* count) {
  return guarded("mfvucl_histogram_bin", [&] {
    require(histogram, "histogram");
    const auto& h = histogram->spec;
    if (i >= h.counts.size()) throw InvalidArgument("bin out of range");
    if (start) *start = h.bin_edges[i];
    if (end) *end = h.bin_edges[i + 1];
    if (count) *count = h.counts[i];
  });
}

mfvucl_status mfvucl_histogram_write(const mfvucl_histogram* histogram,
                                     mfvucl_format format, char** out) {
  return guarded("mfvucl_histogram_write", [&] {
    require(histogram, "histogram");
    emit(write_histogram(histogram->spec, to_format(format)), out);
  });
}

// ---- single-operation reports

mfvucl_status mfvucl_summary_write(const mfvucl_dataset* dataset,
                                   mfvucl_format format, char** out) {
  return guarded("mfvucl_summary_write", [&] {
    require(dataset, "dataset");
    emit(write_report(to_json(summarize(dataset->data)), to_format(format)), out);
  });
}

mfvucl_status mfvucl_mfv_write(const mfvucl_dataset* dataset,
                               const mfvucl_mfv_config* config,
                               mfvucl_format format, char** out) {
  return guarded("mfvucl_mfv_write", [&] {
    require(dataset, "dataset");
    const auto cfg = to_config(config);
    Json j = to_json(mfv_fit(dataset->data, cfg));
    j["initial_dihesion"] = initial_dihesion(dataset->data);
    j["n"] = dataset->data.size();
    j["unit"] = dataset->data.unit();
    emit(write_report(j, to_format(format)), out);
  });
}

mfvucl_status mfvucl_partition_write(const mfvucl_partition* partition,
                                     mfvucl_format format, char** out) {
  return guarded("mfvucl_partition_write", [&] {
    require(partition, "partition");
    emit(write_report(to_json(partition->partition), to_format(format)), out);
  });
}

mfvucl_status mfvucl_shapiro_wilk_write(const mfvucl_dataset* dataset,
                                        mfvucl_format format, char** out) {
  return guarded("mfvucl_shapiro_wilk_write", [&] {
    require(dataset, "dataset");
    emit(write_report(to_json(shapiro_wilk(dataset->data.values())),
                      to_format(format)),
         out);
  });
}

mfvucl_status mfvucl_ks_two_sample_write(const mfvucl_dataset* a,
                                         const mfvucl_dataset* b,
                                         mfvucl_format format, char** out) {
  return guarded("mfvucl_ks_two_sample_write", [&] {
    require(a, "a");
    require(b, "b");
    emit(write_report(to_json(ks_two_sample(a->data.values(), b->data.values())),
                      to_format(format)),
         out);
  });
}

mfvucl_status mfvucl_ucl_write(const mfvucl_dataset* dataset, const char* method,
                               double alpha, mfvucl_format format, char** out) {
  return guarded("mfvucl_ucl_write", [&] {
    require(dataset, "dataset");
    require(method, "method");
    const std::string_view m = method;
    Json j;
    if (m == "chebyshev") {
      j = to_json(chebyshev_ucl(summarize(dataset->data), alpha));
    } else if (m == "max_plus_2sigma") {
      j = to_json(max_plus_2sigma(dataset->data));
    } else if (m == "weighted_mean") {
      j = to_json(weighted_mean(dataset->data));
      j["method"] = "weighted_mean";
    } else {
      throw InvalidArgument("unknown UCL method '" + std::string(m) + "'");
    }
    emit(write_report(j, to_format(format)), out);
  });
}

// ---- analysis

void mfvucl_analysis_options_default(mfvucl_analysis_options* options) {
  if (options == nullptr) return;
  *options = mfvucl_analysis_options{};
  options->confidence = kDefaultConfidence;
  mfvucl_bootstrap_plan_default(&options->plan);
  options->outlier_k = kDefaultWhisker;
  options->exemption_threshold = 100.0;
}

mfvucl_status mfvucl_analyze(const mfvucl_dataset* dataset,
                             const mfvucl_analysis_options* options,
                             mfvucl_format format, char** out) {
  return guarded("mfvucl_analyze", [&] {
    require(dataset, "dataset");
    require(options, "options");
    AnalysisOptions opt;
    opt.confidence = options->confidence;
    opt.plan = to_plan(&options->plan);
    opt.outlier_k = options->outlier_k;
    opt.exclude_outliers = options->exclude_outliers != 0;
    opt.seed_generated = options->seed_generated != 0;
    opt.histogram_bins = options->histogram_bins;
    if (options->isotope) opt.isotope = options->isotope;
    if (options->with_inventory) {
      // Concentration is filled in from the selected bound; any positive
      // placeholder passes validation until then.
      opt.inventory = InventoryInputs{options->volume,
                                      options->density,
                                      1.0,
                                      options->specific_activity,
                                      options->specific_activity_uncertainty,
                                      options->exemption_threshold};
      opt.inventory->validate();
    }
    emit(write_report(to_json(run_analysis(dataset->data, opt)), to_format(format)),
         out);
  });
}

}  // extern "C"
