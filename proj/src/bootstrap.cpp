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

#include "mfvucl/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "mfvucl/random.hpp"

namespace mfvucl {
namespace {

unsigned resolve_threads(unsigned requested, std::size_t replicates) {
  unsigned t = requested;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(
      std::min<std::size_t>(t, std::max<std::size_t>(1, replicates)));
}

// Fills out[r] = make_replicate(r, scratch) for every r, split into
// contiguous blocks across threads. Each replicate owns its random stream,
// so the result does not depend on the block layout.
template <typename MakeReplicate>
void for_each_replicate(std::vector<double>& out, unsigned threads,
                        std::size_t scratch_size, MakeReplicate make_replicate) {
  const std::size_t total = out.size();
  const unsigned workers = resolve_threads(threads, total);

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run_block = [&](std::size_t begin, std::size_t end) {
    try {
      std::vector<double> scratch(scratch_size);
      for (std::size_t r = begin; r < end; ++r)
        out[r] = make_replicate(r, scratch);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    run_block(0, total);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t block = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * block);
      const std::size_t end = std::min(total, begin + block);
      if (begin < end) pool.emplace_back(run_block, begin, end);
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void BootstrapPlan::validate() const {
  if (replicates < 1) throw InvalidArgument("bootstrap needs >= 1 replicate");
  mfv.validate();
}

double evaluate_statistic(StatisticKind kind, std::span<const double> values,
                          const MfvConfig& mfv) {
  switch (kind) {
    case StatisticKind::mfv:
      return mfv_fit(values, mfv).m;
    case StatisticKind::mean:
      return summarize(values).mean;
  }
  throw InvalidArgument("unknown statistic");
}

BootstrapDistribution bootstrap_nonparametric(const Dataset& dataset,
                                              const BootstrapPlan& plan) {
  plan.validate();
  if (plan.method != BootstrapMethod::nonparametric)
    throw InvalidArgument("plan method is not nonparametric");

  const auto x = dataset.values();
  const std::size_t n = x.size();
  BootstrapDistribution dist;
  dist.plan = plan;
  dist.point_estimate = evaluate_statistic(plan.statistic, x, plan.mfv);
  dist.values.resize(plan.replicates);

  for_each_replicate(
      dist.values, plan.threads, n,
      [&](std::size_t r, std::vector<double>& sample) {
        auto rng = Xoshiro256::substream(plan.seed, r);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (auto& s : sample) s = x[pick(rng)];
        return evaluate_statistic(plan.statistic, sample, plan.mfv);
      });
  return dist;
}

BootstrapDistribution bootstrap_hybrid_parametric(const Dataset& dataset,
                                                  const BootstrapPlan& plan) {
  plan.validate();
  if (plan.method != BootstrapMethod::hybrid_parametric)
    throw InvalidArgument("plan method is not hybrid_parametric");
  if (!dataset.has_uncertainty())
    throw PreconditionError(
        "hybrid parametric bootstrap needs per-measurement uncertainties; "
        "supply an uncertainty column or use the nonparametric bootstrap");

  const auto x = dataset.values();
  const auto sigma = dataset.uncertainties();
  const std::size_t n = x.size();
  BootstrapDistribution dist;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(sigma[i] > 0.0))
      throw PreconditionError(
          "hybrid parametric bootstrap needs uncertainty > 0 for every "
          "measurement (measurement " + std::to_string(i) +
          " has 0); use the nonparametric bootstrap instead");
    if (x[i] - 2.0 * sigma[i] < 0.0) dist.near_zero_indices.push_back(i);
  }
  dist.plan = plan;
  dist.point_estimate = evaluate_statistic(plan.statistic, x, plan.mfv);
  dist.values.resize(plan.replicates);

  const bool resample = plan.kernel == HpbKernel::resample_perturb;
  for_each_replicate(
      dist.values, plan.threads, n,
      [&](std::size_t r, std::vector<double>& sample) {
        auto rng = Xoshiro256::substream(plan.seed, r);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t src = resample ? pick(rng) : i;
          sample[i] = x[src] + sigma[src] * gauss(rng);
        }
        return evaluate_statistic(plan.statistic, sample, plan.mfv);
      });
  return dist;
}

BootstrapDistribution run_bootstrap(const Dataset& dataset,
                                    const BootstrapPlan& plan) {
  return plan.method == BootstrapMethod::nonparametric
             ? bootstrap_nonparametric(dataset, plan)
             : bootstrap_hybrid_parametric(dataset, plan);
}

ConfidenceInterval percentile_interval(std::span<const double> values,
                                       double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0))
    throw InvalidArgument("confidence must lie in (0, 1)");
  if (values.empty()) throw InvalidArgument("empty bootstrap distribution");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return ConfidenceInterval{
      interpolated_quantile(sorted, (1.0 - confidence) / 2.0),
      interpolated_quantile(sorted, (1.0 + confidence) / 2.0), confidence,
      "percentile"};
}

ConfidenceInterval percentile_interval(const BootstrapDistribution& dist,
                                       double confidence) {
  return percentile_interval(dist.values, confidence);
}

std::string_view to_string(StatisticKind kind) {
  return kind == StatisticKind::mfv ? "mfv" : "mean";
}

std::string_view to_string(BootstrapMethod method) {
  return method == BootstrapMethod::nonparametric ? "nonparametric"
                                                  : "hybrid_parametric";
}

std::string_view to_string(HpbKernel kernel) {
  return kernel == HpbKernel::resample_perturb ? "resample_perturb"
                                               : "per_element";
}

StatisticKind parse_statistic_kind(std::string_view text) {
  if (text == "mfv") return StatisticKind::mfv;
  if (text == "mean") return StatisticKind::mean;
  throw InvalidArgument("unknown statistic '" + std::string(text) + "'");
}

BootstrapMethod parse_bootstrap_method(std::string_view text) {
  if (text == "nonparametric") return BootstrapMethod::nonparametric;
  if (text == "hybrid_parametric" || text == "hpb")
    return BootstrapMethod::hybrid_parametric;
  throw InvalidArgument("unknown bootstrap method '" + std::string(text) + "'");
}

HpbKernel parse_hpb_kernel(std::string_view text) {
  if (text == "resample_perturb") return HpbKernel::resample_perturb;
  if (text == "per_element") return HpbKernel::per_element;
  throw InvalidArgument("unknown HPB kernel '" + std::string(text) + "'");
}

}  // namespace mfvucl
