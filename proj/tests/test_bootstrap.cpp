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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mfvucl/bootstrap.hpp"
#include "mfvucl/random.hpp"
#include "support.hpp"

using namespace mfvucl;

namespace {

BootstrapPlan plan(BootstrapMethod method, std::size_t replicates,
                   std::uint64_t seed, unsigned threads = 0) {
  BootstrapPlan p;
  p.method = method;
  p.replicates = replicates;
  p.seed = seed;
  p.threads = threads;
  return p;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

double sd_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / (v.size() - 1));
}

}  // namespace

TEST_CASE("SplitMix64 finalizer reference output") {
  // First output of SplitMix64 seeded with 0.
  CHECK(splitmix64_mix(0x9e3779b97f4a7c15ULL) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("substreams are deterministic and distinct") {
  auto a = Xoshiro256::substream(7, 3);
  auto b = Xoshiro256::substream(7, 3);
  auto c = Xoshiro256::substream(7, 4);
  auto d = Xoshiro256::substream(8, 3);
  const auto a0 = a(), b0 = b(), c0 = c(), d0 = d();
  CHECK(a0 == b0);
  CHECK(a0 != c0);
  CHECK(a0 != d0);
}

TEST_CASE("results do not depend on the thread count") {
  const auto ref = run_bootstrap(testing::trimmed(),
                                 plan(BootstrapMethod::nonparametric, 3000, 11, 1));
  for (unsigned t : {2u, 3u, 8u}) {
    CAPTURE(t);
    const auto other = run_bootstrap(
        testing::trimmed(), plan(BootstrapMethod::nonparametric, 3000, 11, t));
    CHECK(other.values == ref.values);
  }
  const auto h1 = run_bootstrap(testing::small(),
                                plan(BootstrapMethod::hybrid_parametric, 2000, 5, 1));
  const auto h8 = run_bootstrap(testing::small(),
                                plan(BootstrapMethod::hybrid_parametric, 2000, 5, 8));
  CHECK(h1.values == h8.values);
}

TEST_CASE("the seed controls the draws") {
  const auto a = run_bootstrap(testing::full(),
                               plan(BootstrapMethod::nonparametric, 500, 1));
  const auto b = run_bootstrap(testing::full(),
                               plan(BootstrapMethod::nonparametric, 500, 1));
  const auto c = run_bootstrap(testing::full(),
                               plan(BootstrapMethod::nonparametric, 500, 2));
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  CHECK(a.values.size() == 500);
  CHECK(a.point_estimate == mfv_fit(testing::full()).m);
}

TEST_CASE("nonparametric bootstrap of the mean is centred on the sample mean") {
  auto p = plan(BootstrapMethod::nonparametric, 20000, 3);
  p.statistic = StatisticKind::mean;
  const auto d = run_bootstrap(testing::trimmed(), p);
  const auto s = summarize(testing::trimmed());
  CHECK_NEAR(mean_of(d.values), s.mean, 0.005);
  // Plug-in standard error sqrt((n-1)/n) * s / sqrt(n).
  const double n = 26.0;
  CHECK_NEAR(sd_of(d.values), std::sqrt((n - 1) / n) * *s.std_dev / std::sqrt(n),
             0.003);
}

TEST_CASE("single-element datasets give constant replicates") {
  const Dataset one({{2.5, 0.1}});
  const auto d = run_bootstrap(one, plan(BootstrapMethod::nonparametric, 100, 9));
  CHECK(std::all_of(d.values.begin(), d.values.end(),
                    [](double v) { return v == 2.5; }));
}

TEST_CASE("degenerate resamples return the common value") {
  const Dataset same({{1.0, 0.1}, {1.0, 0.1}, {1.0, 0.1}});
  const auto d = run_bootstrap(same, plan(BootstrapMethod::nonparametric, 50, 4));
  CHECK(std::all_of(d.values.begin(), d.values.end(),
                    [](double v) { return v == 1.0; }));
}

TEST_CASE("per-element kernel of the mean matches its analytic spread") {
  auto p = plan(BootstrapMethod::hybrid_parametric, 40000, 21);
  p.kernel = HpbKernel::per_element;
  p.statistic = StatisticKind::mean;
  const auto& ds = testing::small();
  const auto d = run_bootstrap(ds, p);
  double var = 0.0;
  for (double s : ds.uncertainties()) var += s * s;
  const double n = static_cast<double>(ds.size());
  CHECK_NEAR(mean_of(d.values), summarize(ds).mean, 0.002);
  CHECK_NEAR(sd_of(d.values), std::sqrt(var) / n, 0.001);
}

TEST_CASE("resample-perturb kernel of the mean adds both variance sources") {
  auto p = plan(BootstrapMethod::hybrid_parametric, 40000, 22);
  p.statistic = StatisticKind::mean;
  const auto& ds = testing::small();
  const auto d = run_bootstrap(ds, p);
  const auto x = ds.values();
  const auto s = ds.uncertainties();
  const double n = static_cast<double>(ds.size());
  const double mu = mean_of(x);
  double spread = 0.0, noise = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    spread += (x[i] - mu) * (x[i] - mu) / n;
    noise += s[i] * s[i] / n;
  }
  CHECK_NEAR(sd_of(d.values), std::sqrt((spread + noise) / n), 0.002);
}

TEST_CASE("tiny uncertainties collapse the hybrid spread") {
  std::vector<Measurement> ms;
  for (const auto& m : testing::small().measurements()) ms.push_back({m.value, 1e-12});
  auto p = plan(BootstrapMethod::hybrid_parametric, 2000, 5);
  p.kernel = HpbKernel::per_element;
  const auto d = run_bootstrap(Dataset(ms), p);
  const auto [lo, hi] = std::minmax_element(d.values.begin(), d.values.end());
  CHECK(*hi - *lo < 1e-9);
  CHECK_NEAR(*lo, d.point_estimate, 1e-9);
}

TEST_CASE("hybrid bootstrap needs uncertainties") {
  const auto p = plan(BootstrapMethod::hybrid_parametric, 10, 1);
  CHECK_THROWS_AS(run_bootstrap(Dataset::from_values(std::vector<double>{1, 2, 3}), p),
                  PreconditionError);
  CHECK_THROWS_AS(run_bootstrap(Dataset({{1.0, 0.1}, {2.0, 0.0}}), p),
                  PreconditionError);
}

TEST_CASE("draws that may go negative are flagged") {
  const Dataset d({{0.1, 0.2}, {1.0, 0.1}, {0.05, 0.01}});
  const auto r = run_bootstrap(d, plan(BootstrapMethod::hybrid_parametric, 10, 1));
  CHECK(r.near_zero_indices == std::vector<std::size_t>{0});
  const auto np = run_bootstrap(d, plan(BootstrapMethod::nonparametric, 10, 1));
  CHECK(np.near_zero_indices.empty());
}

TEST_CASE("plan validation") {
  auto p = plan(BootstrapMethod::nonparametric, 0, 1);
  CHECK_THROWS_AS(run_bootstrap(testing::small(), p), InvalidArgument);
}

TEST_CASE("percentile interval of 1..100") {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);
  std::reverse(v.begin(), v.end());
  const auto ci = percentile_interval(v, 0.90);
  CHECK_NEAR(ci.lower, 5.95, 1e-12);
  CHECK_NEAR(ci.upper, 95.05, 1e-12);
  CHECK(ci.confidence == 0.90);
  CHECK(ci.method_label == "percentile");
}

TEST_CASE("percentile interval degenerate and invalid cases") {
  const std::vector<double> same(20, 3.5);
  const auto ci = percentile_interval(same, 0.99);
  CHECK(ci.lower == 3.5);
  CHECK(ci.upper == 3.5);
  CHECK_THROWS_AS(percentile_interval(same, 0.0), InvalidArgument);
  CHECK_THROWS_AS(percentile_interval(same, 1.0), InvalidArgument);
  CHECK_THROWS_AS(percentile_interval(std::vector<double>{}, 0.5), InvalidArgument);
}

TEST_CASE("enum names round-trip") {
  for (auto k : {StatisticKind::mfv, StatisticKind::mean})
    CHECK(parse_statistic_kind(to_string(k)) == k);
  for (auto m : {BootstrapMethod::nonparametric, BootstrapMethod::hybrid_parametric})
    CHECK(parse_bootstrap_method(to_string(m)) == m);
  for (auto k : {HpbKernel::resample_perturb, HpbKernel::per_element})
    CHECK(parse_hpb_kernel(to_string(k)) == k);
  CHECK(parse_bootstrap_method("hpb") == BootstrapMethod::hybrid_parametric);
  CHECK_THROWS_AS(parse_statistic_kind("median"), InvalidArgument);
}

TEST_CASE("evaluate_statistic") {
  const std::vector<double> v{1, 2, 6};
  CHECK(evaluate_statistic(StatisticKind::mean, v) == 3.0);
  CHECK(evaluate_statistic(StatisticKind::mfv, v) == mfv_fit(v).m);
}
