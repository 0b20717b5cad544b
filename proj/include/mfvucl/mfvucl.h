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

/*
 * C interface to the mfvucl library.
 *
 * Conventions:
 *  - Every fallible call returns an mfvucl_status; MFVUCL_OK is 0.
 *  - On failure, mfvucl_last_error() returns a message for the calling
 *    thread. It stays valid until the next failing call on that thread.
 *  - Handles (mfvucl_dataset, mfvucl_partition, mfvucl_distribution,
 *    mfvucl_histogram) are opaque, immutable once created, and must be
 *    released with their *_destroy function. Destroy accepts NULL.
 *  - Strings returned through `char** out` are heap-allocated and must be
 *    released with mfvucl_string_free().
 *  - All calls are thread-safe on distinct or shared const handles.
 */
#ifndef MFVUCL_MFVUCL_H
#define MFVUCL_MFVUCL_H

#include <stddef.h>
#include <stdint.h>

#if defined(MFVUCL_BUILDING_LIBRARY)
#define MFVUCL_API __attribute__((visibility("default")))
#else
#define MFVUCL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mfvucl_status {
  MFVUCL_OK = 0,
  MFVUCL_ERR_INVALID_ARGUMENT = 1,
  MFVUCL_ERR_PARSE = 2,
  MFVUCL_ERR_PRECONDITION = 3,
  MFVUCL_ERR_NUMERIC = 4,
  MFVUCL_ERR_INTERNAL = 5
} mfvucl_status;

typedef enum mfvucl_format { MFVUCL_FORMAT_CSV = 0, MFVUCL_FORMAT_JSON = 1 } mfvucl_format;

typedef enum mfvucl_statistic { MFVUCL_STAT_MFV = 0, MFVUCL_STAT_MEAN = 1 } mfvucl_statistic;

typedef enum mfvucl_bootstrap_method {
  MFVUCL_BOOT_NONPARAMETRIC = 0,
  MFVUCL_BOOT_HYBRID_PARAMETRIC = 1
} mfvucl_bootstrap_method;

typedef enum mfvucl_hpb_kernel {
  MFVUCL_HPB_RESAMPLE_PERTURB = 0,
  MFVUCL_HPB_PER_ELEMENT = 1
} mfvucl_hpb_kernel;

typedef struct mfvucl_dataset mfvucl_dataset;
typedef struct mfvucl_partition mfvucl_partition;
typedef struct mfvucl_distribution mfvucl_distribution;
typedef struct mfvucl_histogram mfvucl_histogram;

/* ---- library ---------------------------------------------------------- */

MFVUCL_API const char* mfvucl_version(void);
MFVUCL_API const char* mfvucl_last_error(void);
MFVUCL_API const char* mfvucl_status_name(mfvucl_status status);
MFVUCL_API void mfvucl_string_free(char* s);

/* ---- datasets --------------------------------------------------------- */

/* `uncertainties` may be NULL: the dataset then carries no uncertainties. */
MFVUCL_API mfvucl_status mfvucl_dataset_create(const double* values,
                                               const double* uncertainties,
                                               size_t n, const char* unit,
                                               const char* label,
                                               mfvucl_dataset** out);
MFVUCL_API mfvucl_status mfvucl_dataset_parse(const char* text, size_t length,
                                              mfvucl_format format,
                                              mfvucl_dataset** out);
/* Format chosen by extension: .json is JSON, anything else CSV. */
MFVUCL_API mfvucl_status mfvucl_dataset_load_file(const char* path,
                                                  mfvucl_dataset** out);
/* u235_full, u235_trimmed, u235_small, granite_density */
MFVUCL_API mfvucl_status mfvucl_dataset_load_fixture(const char* name,
                                                     mfvucl_dataset** out);
MFVUCL_API void mfvucl_dataset_destroy(mfvucl_dataset* dataset);

MFVUCL_API size_t mfvucl_dataset_size(const mfvucl_dataset* dataset);
MFVUCL_API mfvucl_status mfvucl_dataset_get(const mfvucl_dataset* dataset,
                                            size_t index, double* value,
                                            double* uncertainty);
MFVUCL_API int mfvucl_dataset_has_uncertainty(const mfvucl_dataset* dataset);
/* Borrowed; valid while the handle lives. */
MFVUCL_API const char* mfvucl_dataset_unit(const mfvucl_dataset* dataset);
MFVUCL_API const char* mfvucl_dataset_label(const mfvucl_dataset* dataset);
MFVUCL_API mfvucl_status mfvucl_dataset_write(const mfvucl_dataset* dataset,
                                              mfvucl_format format, char** out);

/* ---- summary statistics ----------------------------------------------- */

typedef struct mfvucl_summary {
  size_t n;
  double mean;
  double std_dev; /* meaningful only when has_std_dev != 0 */
  int has_std_dev;
  double min;
  double max;
} mfvucl_summary;

MFVUCL_API mfvucl_status mfvucl_summarize(const mfvucl_dataset* dataset,
                                          mfvucl_summary* out);

/* ---- most frequent value ---------------------------------------------- */

typedef struct mfvucl_mfv_config {
  double tol_m;
  double tol_eps;
  int max_iter;
} mfvucl_mfv_config;

typedef struct mfvucl_mfv_result {
  double m;
  double epsilon;
  double sigma_m;
  int iterations;
  int converged;
} mfvucl_mfv_result;

MFVUCL_API void mfvucl_mfv_config_default(mfvucl_mfv_config* config);
/* `config` may be NULL for defaults. */
MFVUCL_API mfvucl_status mfvucl_mfv_fit(const mfvucl_dataset* dataset,
                                        const mfvucl_mfv_config* config,
                                        mfvucl_mfv_result* out);
MFVUCL_API mfvucl_status mfvucl_initial_dihesion(const mfvucl_dataset* dataset,
                                                 double* out);
MFVUCL_API mfvucl_status mfvucl_mfv_variance(const mfvucl_dataset* dataset,
                                             double m, double epsilon,
                                             double* out);

/* ---- outlier screen --------------------------------------------------- */

typedef struct mfvucl_fences {
  double q1;
  double q3;
  double lower_fence;
  double upper_fence;
  double k;
} mfvucl_fences;

MFVUCL_API mfvucl_status mfvucl_iqr_partition(const mfvucl_dataset* dataset,
                                              double k, mfvucl_partition** out);
MFVUCL_API void mfvucl_partition_destroy(mfvucl_partition* partition);
MFVUCL_API void mfvucl_partition_fences(const mfvucl_partition* partition,
                                        mfvucl_fences* out);
MFVUCL_API size_t mfvucl_partition_outlier_count(const mfvucl_partition* partition);
/* Index into the screened dataset of the i-th outlier (ascending). */
MFVUCL_API mfvucl_status mfvucl_partition_outlier_index(
    const mfvucl_partition* partition, size_t i, size_t* out);
/* Borrowed; valid while the partition lives. */
MFVUCL_API const mfvucl_dataset* mfvucl_partition_retained(
    const mfvucl_partition* partition);

/* ---- distribution tests ----------------------------------------------- */

typedef struct mfvucl_test_report {
  double statistic;
  double p_value;
  size_t n_a;
  size_t n_b;
} mfvucl_test_report;

MFVUCL_API mfvucl_status mfvucl_shapiro_wilk(const double* values, size_t n,
                                             mfvucl_test_report* out);
MFVUCL_API mfvucl_status mfvucl_ks_two_sample(const double* a, size_t n_a,
                                              const double* b, size_t n_b,
                                              mfvucl_test_report* out);

/* ---- bootstrap -------------------------------------------------------- */

typedef struct mfvucl_bootstrap_plan {
  mfvucl_bootstrap_method method;
  mfvucl_statistic statistic;
  mfvucl_hpb_kernel kernel;
  size_t replicates;
  uint64_t seed;
  unsigned threads; /* 0: all cores; never changes results */
} mfvucl_bootstrap_plan;

typedef struct mfvucl_interval {
  double lower;
  double upper;
  double confidence;
} mfvucl_interval;

MFVUCL_API void mfvucl_bootstrap_plan_default(mfvucl_bootstrap_plan* plan);
MFVUCL_API mfvucl_status mfvucl_bootstrap(const mfvucl_dataset* dataset,
                                          const mfvucl_bootstrap_plan* plan,
                                          mfvucl_distribution** out);
MFVUCL_API void mfvucl_distribution_destroy(mfvucl_distribution* dist);
MFVUCL_API size_t mfvucl_distribution_size(const mfvucl_distribution* dist);
/* Borrowed pointer to `size` replicate statistics in replicate order. */
MFVUCL_API const double* mfvucl_distribution_values(const mfvucl_distribution* dist);
MFVUCL_API double mfvucl_distribution_point_estimate(const mfvucl_distribution* dist);
MFVUCL_API mfvucl_status mfvucl_percentile_interval(const mfvucl_distribution* dist,
                                                    double confidence,
                                                    mfvucl_interval* out);
/* JSON/CSV summary: plan, point estimate and the interval at `confidence`. */
MFVUCL_API mfvucl_status mfvucl_distribution_write(const mfvucl_distribution* dist,
                                                   double confidence,
                                                   mfvucl_format format,
                                                   char** out);

/* ---- upper confidence limits ----------------------------------------- */

typedef struct mfvucl_ucl {
  double value;
  double confidence;
  size_t n;
  double mean;
  double std_dev;
} mfvucl_ucl;

typedef struct mfvucl_conservative {
  mfvucl_ucl bootstrap_upper;
  mfvucl_interval bootstrap_interval;
  mfvucl_bootstrap_method bootstrap_method;
  mfvucl_ucl chebyshev;
  mfvucl_ucl max_plus_2sigma;
  mfvucl_ucl selected;
  /* 0 bootstrap, 1 chebyshev, 2 max_plus_2sigma */
  int selected_component;
} mfvucl_conservative;

MFVUCL_API mfvucl_status mfvucl_chebyshev_ucl(const mfvucl_dataset* dataset,
                                              double alpha, mfvucl_ucl* out);
MFVUCL_API mfvucl_status mfvucl_max_plus_2sigma(const mfvucl_dataset* dataset,
                                                mfvucl_ucl* out);
MFVUCL_API mfvucl_status mfvucl_weighted_mean(const mfvucl_dataset* dataset,
                                              double* value,
                                              double* standard_error);
/* `plan` may be NULL for defaults; its method is chosen by dataset size. */
MFVUCL_API mfvucl_status mfvucl_conservative_upper_bound(
    const mfvucl_dataset* dataset, double confidence,
    const mfvucl_bootstrap_plan* plan, mfvucl_conservative* out);
MFVUCL_API mfvucl_status mfvucl_conservative_upper_bound_write(
    const mfvucl_dataset* dataset, double confidence,
    const mfvucl_bootstrap_plan* plan, mfvucl_format format, char** out);

/* ---- inventory -------------------------------------------------------- */

typedef struct mfvucl_inventory_inputs {
  double volume;                        /* m^3 */
  double density;                       /* kg/m^3 */
  double concentration;                 /* Bq/kg */
  double specific_activity;             /* Bq/g */
  double specific_activity_uncertainty; /* Bq/g */
  double exemption_threshold;           /* g */
} mfvucl_inventory_inputs;

typedef struct mfvucl_inventory {
  double total_mass;     /* kg */
  double total_activity; /* Bq */
  double fissile_mass;   /* g */
  double fissile_mass_uncertainty;
  int exempt;
} mfvucl_inventory;

MFVUCL_API mfvucl_status mfvucl_estimate_inventory(
    const mfvucl_inventory_inputs* inputs, mfvucl_inventory* out);
MFVUCL_API mfvucl_status mfvucl_estimate_inventory_write(
    const mfvucl_inventory_inputs* inputs, mfvucl_format format, char** out);

/* ---- histograms ------------------------------------------------------- */

typedef struct mfvucl_marker {
  const char* label;
  double value;
} mfvucl_marker;

MFVUCL_API mfvucl_status mfvucl_histogram_create(const double* values, size_t n,
                                                 size_t bins,
                                                 const mfvucl_marker* markers,
                                                 size_t n_markers,
                                                 mfvucl_histogram** out);
MFVUCL_API mfvucl_status mfvucl_histogram_create_with_edges(
    const double* values, size_t n, const double* edges, size_t n_edges,
    const mfvucl_marker* markers, size_t n_markers, mfvucl_histogram** out);
MFVUCL_API void mfvucl_histogram_destroy(mfvucl_histogram* histogram);
MFVUCL_API size_t mfvucl_histogram_bin_count(const mfvucl_histogram* histogram);
MFVUCL_API mfvucl_status mfvucl_histogram_bin(const mfvucl_histogram* histogram,
                                              size_t i, double* start,
                                              double* end, size_t* count);
MFVUCL_API mfvucl_status mfvucl_histogram_write(const mfvucl_histogram* histogram,
                                                mfvucl_format format, char** out);

/* ---- reports ---------------------------------------------------------- */

/* JSON/CSV report for one operation on one dataset. */
MFVUCL_API mfvucl_status mfvucl_summary_write(const mfvucl_dataset* dataset,
                                              mfvucl_format format, char** out);
MFVUCL_API mfvucl_status mfvucl_mfv_write(const mfvucl_dataset* dataset,
                                          const mfvucl_mfv_config* config,
                                          mfvucl_format format, char** out);
MFVUCL_API mfvucl_status mfvucl_partition_write(const mfvucl_partition* partition,
                                                mfvucl_format format, char** out);
MFVUCL_API mfvucl_status mfvucl_shapiro_wilk_write(const mfvucl_dataset* dataset,
                                                   mfvucl_format format,
                                                   char** out);
MFVUCL_API mfvucl_status mfvucl_ks_two_sample_write(const mfvucl_dataset* a,
                                                    const mfvucl_dataset* b,
                                                    mfvucl_format format,
                                                    char** out);
/* method: "chebyshev", "max_plus_2sigma", "weighted_mean" */
MFVUCL_API mfvucl_status mfvucl_ucl_write(const mfvucl_dataset* dataset,
                                          const char* method, double alpha,
                                          mfvucl_format format, char** out);

/* ---- end-to-end analysis --------------------------------------------- */

typedef struct mfvucl_analysis_options {
  double confidence;
  mfvucl_bootstrap_plan plan;
  double outlier_k;
  int exclude_outliers;
  int seed_generated;  /* echoed into the report */
  int with_inventory;  /* uses the fields below; concentration is the bound */
  double volume;
  double density;
  double specific_activity;
  double specific_activity_uncertainty;
  double exemption_threshold;
  const char* isotope; /* label only; may be NULL */
  size_t histogram_bins; /* 0: none */
} mfvucl_analysis_options;

MFVUCL_API void mfvucl_analysis_options_default(mfvucl_analysis_options* options);
MFVUCL_API mfvucl_status mfvucl_analyze(const mfvucl_dataset* dataset,
                                        const mfvucl_analysis_options* options,
                                        mfvucl_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MFVUCL_MFVUCL_H */
