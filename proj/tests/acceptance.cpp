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

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mfvucl/analysis.hpp"
#include "mfvucl/fixtures.hpp"

using namespace mfvucl;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Criterion {
  int id;
  std::string title;
  bool ok = true;
  std::ostringstream detail;

  Criterion(int i, std::string t) : id(i), title(std::move(t)) { detail.precision(8); }

  // Records `value` against `expected` +/- `tol`.
  void near(const char* what, double value, double expected, double tol) {
    const bool pass = std::abs(value - expected) <= tol;
    ok = ok && pass;
    detail << (detail.tellp() > 0 ? "; " : "") << what << "=" << value;
    if (!pass) detail << " (want " << expected << " +/- " << tol << ")";
  }
  void require(const char* what, bool pass) {
    ok = ok && pass;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (pass ? " ok" : " FAILED");
  }
  ~Criterion() {
    std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                detail.str().c_str());
  }
};

int failures = 0;

void tally(const Criterion& c) {
  if (!c.ok) ++failures;
}

BootstrapPlan make_plan(BootstrapMethod method, std::size_t replicates,
                        unsigned threads = 0) {
  BootstrapPlan p;
  p.method = method;
  p.replicates = replicates;
  p.seed = kSeed;
  p.threads = threads;
  return p;
}

ConfidenceInterval ci_of(const Dataset& d, BootstrapMethod m, std::size_t reps,
                         double conf) {
  return percentile_interval(run_bootstrap(d, make_plan(m, reps)), conf);
}

std::vector<double> random_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(4, 40);
  std::normal_distribution<double> bulk(std::uniform_real_distribution<>(-20, 20)(rng),
                                        std::uniform_real_distribution<>(0.1, 4)(rng));
  std::bernoulli_distribution outlier(0.1);
  std::vector<double> v(size(rng));
  for (auto& x : v) {
    x = bulk(rng);
    if (outlier(rng)) x += 10.0 * bulk.stddev();
  }
  return v;
}

}  // namespace

int main() {
  const auto full = load_fixture("u235_full");
  const auto trimmed = load_fixture("u235_trimmed");
  const auto small = load_fixture("u235_small");
  const auto granite = load_fixture("granite_density");
  const double conf = kDefaultConfidence;
  const double alpha = 1.0 - conf;

  {
    Criterion c{1, "MFV point estimates"};
    double slowest_ms = 0.0;
    auto timed = [&](const Dataset& d) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = mfv_fit(d);
      const auto t1 = std::chrono::steady_clock::now();
      slowest_ms = std::max(
          slowest_ms, std::chrono::duration<double, std::milli>(t1 - t0).count());
      return r.m;
    };
    c.near("30-element", timed(full), 2.18, 0.005);
    c.near("26-element", timed(trimmed), 2.19, 0.005);
    c.near("density", timed(granite), 2614.12, 0.5);
    c.require(("runtime < 10 ms (slowest " + std::to_string(slowest_ms) + " ms)").c_str(),
              slowest_ms < 10.0);
    tally(c);
  }

  {
    Criterion c{2, "IQR outlier screen"};
    const auto p = iqr_partition(full);
    std::multiset<double> got;
    for (const auto& m : p.outliers) got.insert(m.value);
    c.require("outliers == {1.16, 1.23, 4.21, 4.83}",
              got == std::multiset<double>{1.16, 1.23, 4.21, 4.83});
    c.require("26 retained", p.retained.size() == 26);
    tally(c);
  }

  {
    Criterion c{3, "Shapiro-Wilk"};
    const auto t = shapiro_wilk(trimmed.values());
    const auto s = shapiro_wilk(small.values());
    c.near("W(26)", t.statistic, 0.91075, 0.001);
    c.near("p(26)", t.p_value, 0.02743, 0.002);
    c.near("W(9)", s.statistic, 0.95553, 0.001);
    c.near("p(9)", s.p_value, 0.7505, 0.005);
    tally(c);
  }

  {
    Criterion c{4, "two-sample Kolmogorov-Smirnov"};
    const auto r = ks_two_sample(trimmed.values(), small.values());
    c.near("D", r.statistic, 0.098, 0.001);
    c.near("p", r.p_value, 0.9998, 0.005);
    tally(c);
  }

  {
    Criterion c{5, "nonparametric bootstrap CI (MFV, 210000 replicates)"};
    const auto np = BootstrapMethod::nonparametric;
    const auto t = ci_of(trimmed, np, kDefaultReplicates, conf);
    const auto f = ci_of(full, np, kDefaultReplicates, conf);
    c.near("26 lower", t.lower, 2.07, 0.01);
    c.near("26 upper", t.upper, 2.30, 0.01);
    c.near("30 lower", f.lower, 2.05, 0.01);
    c.near("30 upper", f.upper, 2.30, 0.01);
    const auto t3 = ci_of(trimmed, np, 3000, conf);
    const auto f3 = ci_of(full, np, 3000, conf);
    const double drift = std::max({std::abs(t3.lower - t.lower), std::abs(t3.upper - t.upper),
                                   std::abs(f3.lower - f.lower), std::abs(f3.upper - f.upper)});
    c.near("3000 vs 210000 max endpoint shift", drift, 0.0, 0.02);
    tally(c);
  }

  {
    Criterion c{6, "hybrid parametric bootstrap CI (MFV, 210000 replicates)"};
    const auto hpb = BootstrapMethod::hybrid_parametric;
    const auto s = ci_of(small, hpb, kDefaultReplicates, conf);
    const auto g = ci_of(granite, hpb, kDefaultReplicates, conf);
    c.near("9 lower", s.lower, 1.90, 0.03);
    c.near("9 upper", s.upper, 2.51, 0.03);
    c.near("density lower", g.lower, 2587.26, 5.0);
    c.near("density upper", g.upper, 2750.01, 5.0);
    tally(c);
  }

  {
    Criterion c{7, "Chebyshev UCL at alpha = 0.0455"};
    c.near("26", chebyshev_ucl(summarize(trimmed), alpha).value, 2.42, 0.01);
    c.near("30", chebyshev_ucl(summarize(full), alpha).value, 2.85, 0.01);
    c.near("9", chebyshev_ucl(summarize(small), alpha).value, 2.60, 0.01);
    tally(c);
  }

  {
    Criterion c{8, "conservative pipeline on the 9-element set"};
    BootstrapPlan p;
    p.seed = kSeed;
    const auto r = conservative_upper_bound(small, conf, p);
    c.near("bootstrap", r.bootstrap_upper.value, 2.51, 0.03);
    c.near("chebyshev", r.chebyshev.value, 2.60, 0.01);
    c.near("max+2sigma", r.max_plus_2sigma.value, 2.84, 0.01);
    const double largest = std::max(
        {r.bootstrap_upper.value, r.chebyshev.value, r.max_plus_2sigma.value});
    c.require("selected is the largest component", r.selected.value == largest);
    c.near("selected", r.selected.value, 2.84, 0.0);
    tally(c);
  }

  {
    Criterion c{9, "fissile inventory"};
    const auto r = estimate_inventory({1000.0, 2614.12, 2.84, 79960.0, 60.0, 100.0});
    c.require("total mass == 2614120 kg", r.total_mass == 2614120.0);
    c.require("total activity == 7424100.8 Bq", r.total_activity == 7424100.8);
    c.near("fissile mass", r.fissile_mass, 92.85, 0.01);
    c.require("exempt", r.exempt);
    tally(c);
  }

  {
    Criterion c{10, "property suites"};
    std::mt19937_64 rng(2026);
    const MfvConfig cfg;

    bool fixed_point = true;
    for (int i = 0; i < 1000; ++i) {
      const auto v = random_sample(rng);
      const auto r = mfv_fit(v, cfg);
      if (r.epsilon == 0.0) {
        fixed_point &= std::find(v.begin(), v.end(), r.m) != v.end();
        continue;
      }
      if (!r.converged) continue;
      const double e = mfv_dihesion_update(v, r.m, r.epsilon);
      const double m = mfv_location_update(v, r.m, e);
      fixed_point &= std::abs(e - r.epsilon) < 10 * cfg.tol_eps &&
                     std::abs(m - r.m) < 10 * cfg.tol_m;
    }
    c.require("MFV fixed-point residual < 10 tol (1000 datasets)", fixed_point);

    bool affine = true;
    for (int i = 0; i < 300; ++i) {
      const auto v = random_sample(rng);
      const auto base = mfv_fit(v);
      if (!base.converged) continue;
      const double a = std::uniform_real_distribution<>(0.01, 100.0)(rng);
      const double b = std::uniform_real_distribution<>(-1e3, 1e3)(rng);
      std::vector<double> w(v.size());
      std::transform(v.begin(), v.end(), w.begin(), [&](double x) { return a * x + b; });
      const double expected = a * base.m + b;
      affine &= std::abs(mfv_fit(w).m - expected) <=
                1e-6 * std::max({1.0, std::abs(expected), a * base.epsilon});
    }
    c.require("MFV affine equivariance within 1e-6 relative", affine);

    const auto d1 = run_bootstrap(trimmed, make_plan(BootstrapMethod::nonparametric, 5000, 1));
    const auto d2 = run_bootstrap(trimmed, make_plan(BootstrapMethod::nonparametric, 5000, 2));
    const auto d8 = run_bootstrap(trimmed, make_plan(BootstrapMethod::nonparametric, 5000, 8));
    const auto h1 = run_bootstrap(small, make_plan(BootstrapMethod::hybrid_parametric, 5000, 1));
    const auto h8 = run_bootstrap(small, make_plan(BootstrapMethod::hybrid_parametric, 5000, 8));
    c.require("bootstrap bit-identical across 1/2/8 threads",
              d1.values == d2.values && d1.values == d8.values && h1.values == h8.values);

    bool nested = true;
    std::lognormal_distribution<double> draw(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      std::vector<double> v(1 + rng() % 400);
      for (auto& x : v) x = draw(rng);
      double lo = median(v), hi = lo;
      for (double cl : {0.1, 0.5, 0.6827, 0.9, 0.9545, 0.99}) {
        const auto ci = percentile_interval(v, cl);
        nested &= ci.lower <= lo && ci.upper >= hi;
        lo = ci.lower;
        hi = ci.upper;
      }
    }
    c.require("percentile-interval nesting", nested);

    bool complete = true, conserved = true, round_trip = true;
    for (int i = 0; i < 300; ++i) {
      const auto v = random_sample(rng);
      const auto d = Dataset::from_values(v);
      const auto p = iqr_partition(d);
      std::vector<std::size_t> all = p.outlier_indices;
      all.insert(all.end(), p.retained_indices.begin(), p.retained_indices.end());
      std::sort(all.begin(), all.end());
      std::vector<std::size_t> expected(v.size());
      std::iota(expected.begin(), expected.end(), 0);
      complete &= all == expected;

      const auto h = make_histogram(v, 1 + rng() % 40, {});
      conserved &= std::accumulate(h.counts.begin(), h.counts.end(), std::size_t{0}) ==
                   v.size();

      std::vector<Measurement> ms;
      for (double x : v) ms.push_back({x, std::abs(x) * 0.1});
      const Dataset with_sigma(ms, "Bq/kg", "round trip");
      round_trip &= load_dataset(write_dataset(with_sigma, Format::json), Format::json) ==
                    with_sigma;
    }
    c.require("IQR partition completeness", complete);
    c.require("histogram count conservation", conserved);
    c.require("dataset JSON round-trip identity", round_trip);
    tally(c);
  }

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
