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
#include <numbers>
#include <vector>

#include "mfvucl/mfv.hpp"
#include "support.hpp"

using namespace mfvucl;

namespace {

// Plain Steiner iteration in data units, starting from the same point.
struct Reference {
  double m;
  double eps;
};

Reference reference_mfv(const std::vector<double>& x) {
  std::vector<double> s = x;
  std::sort(s.begin(), s.end());
  double m = s.size() % 2 ? s[s.size() / 2]
                          : 0.5 * (s[s.size() / 2 - 1] + s[s.size() / 2]);
  double eps = std::sqrt(3.0) / 2.0 * (s.back() - s.front());
  for (int it = 0; it < 100000; ++it) {
    long double num = 0, den = 0;
    for (double xi : x) {
      const long double d2 = (long double)(xi - m) * (xi - m);
      const long double w = 1.0L / ((long double)eps * eps + d2);
      num += d2 * w * w;
      den += w * w;
    }
    const double eps_new = std::sqrt(3.0 * (double)(num / den));
    long double sx = 0, sw = 0;
    for (double xi : x) {
      const long double w =
          1.0L / ((long double)eps_new * eps_new + (long double)(xi - m) * (xi - m));
      sx += xi * w;
      sw += w;
    }
    const double m_new = (double)(sx / sw);
    const bool done = std::abs(m_new - m) < 1e-13 && std::abs(eps_new - eps) < 1e-13;
    m = m_new;
    eps = eps_new;
    if (done) break;
  }
  return {m, eps};
}

double direct_variance(const std::vector<double>& x, double m, double eps) {
  double info = 0.0;
  for (double xi : x) info += 1.0 / (eps * eps + (xi - m) * (xi - m));
  return 1.0 / std::sqrt(info);
}

}  // namespace

TEST_CASE("initial dihesion") {
  CHECK_NEAR(initial_dihesion(testing::full()), std::sqrt(3.0) / 2.0 * 3.67, 1e-12);
  CHECK_NEAR(initial_dihesion(testing::full()), 3.178, 0.0005);
  const std::vector<double> same{2, 2, 2}, two{0, 2};
  CHECK(initial_dihesion(same) == 0.0);
  CHECK_NEAR(initial_dihesion(two), std::sqrt(3.0), 1e-15);
  CHECK_THROWS_AS(initial_dihesion(std::span<const double>{}), InvalidArgument);
}

TEST_CASE("MFV of the published sets") {
  const auto f = mfv_fit(testing::full());
  CHECK(f.converged);
  CHECK_NEAR(f.m, 2.18, 0.005);
  CHECK_NEAR(f.m, 2.179579, 1e-6);
  CHECK_NEAR(f.epsilon, 0.233740, 1e-6);
  CHECK_NEAR(f.sigma_m, 0.057780, 1e-6);

  const auto t = mfv_fit(testing::trimmed());
  CHECK(t.converged);
  CHECK_NEAR(t.m, 2.19, 0.005);

  const auto g = mfv_fit(testing::granite());
  CHECK(g.converged);
  CHECK_NEAR(g.m, 2614.12, 0.005);
}

TEST_CASE("MFV agrees with a direct data-unit iteration") {
  for (const auto* d : {&testing::full(), &testing::trimmed(), &testing::small(),
                        &testing::granite()}) {
    CAPTURE(d->label());
    const auto v = d->values();
    const auto ref = reference_mfv(v);
    const auto r = mfv_fit(v);
    const double scale = std::max(1.0, std::abs(ref.m));
    CHECK_NEAR(r.m, ref.m, 1e-8 * scale);
    CHECK_NEAR(r.epsilon, ref.eps, 1e-8 * scale);
  }
}

TEST_CASE("MFV variance on the 26-element set matches direct summation") {
  const auto v = testing::trimmed().values();
  const auto r = mfv_fit(v);
  const double expected = direct_variance(v, r.m, r.epsilon);
  CHECK_NEAR(mfv_variance(v, r.m, r.epsilon), expected, 1e-15);
  CHECK_NEAR(r.sigma_m, expected, 1e-15);
  CHECK_NEAR(expected, 0.056471, 1e-6);
}

TEST_CASE("MFV variance edge cases") {
  const std::vector<double> two{0, 2}, same{3, 3, 3};
  CHECK_NEAR(mfv_variance(two, 1.0, 1.0), 1.0, 1e-15);
  CHECK(mfv_variance(same, 3.0, 0.0) == 0.0);
  CHECK_THROWS_AS(mfv_variance(two, 1.0, -1.0), InvalidArgument);
}

TEST_CASE("all-equal data short-circuits") {
  const std::vector<double> same{4.5, 4.5, 4.5};
  const auto r = mfv_fit(same);
  CHECK(r.m == 4.5);
  CHECK(r.epsilon == 0.0);
  CHECK(r.sigma_m == 0.0);
  CHECK(r.iterations == 0);
  CHECK(r.converged);
}

TEST_CASE("single value") {
  const std::vector<double> one{7.25};
  const auto r = mfv_fit(one);
  CHECK(r.m == 7.25);
  CHECK(r.converged);
}

TEST_CASE("a dominant tie collapses onto the tied value") {
  const std::vector<double> v{1.0, 1.0, 1.0, 1.0, 5.0};
  const auto r = mfv_fit(v);
  CHECK(r.m == 1.0);
  CHECK(r.epsilon == 0.0);
  CHECK(r.converged);
}

TEST_CASE("iteration cap flags non-convergence") {
  MfvConfig cfg;
  cfg.max_iter = 2;
  const auto r = mfv_fit(testing::full(), cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
  CHECK(std::isfinite(r.m));
}

TEST_CASE("bad configuration and input") {
  const std::vector<double> v{1, 2, 3};
  CHECK_THROWS_AS(mfv_fit(v, MfvConfig{0.0, 1e-9, 10}), InvalidArgument);
  CHECK_THROWS_AS(mfv_fit(v, MfvConfig{1e-9, 1e-9, 0}), InvalidArgument);
  CHECK_THROWS_AS(mfv_fit(std::span<const double>{}), InvalidArgument);
  const std::vector<double> bad{1.0, std::nan("")};
  CHECK_THROWS_AS(mfv_fit(bad), InvalidArgument);
}

TEST_CASE("single update steps match their formulas") {
  const std::vector<double> v{0.0, 1.0, 3.0};
  const double m = 1.2, eps = 0.7;
  double num = 0, den = 0, sx = 0, sw = 0;
  for (double x : v) {
    const double d2 = (x - m) * (x - m);
    const double w = 1.0 / (eps * eps + d2);
    num += d2 * w * w;
    den += w * w;
    sx += x * w;
    sw += w;
  }
  CHECK_NEAR(mfv_dihesion_update(v, m, eps), std::sqrt(3.0 * num / den), 1e-15);
  CHECK_NEAR(mfv_location_update(v, m, eps), sx / sw, 1e-15);
}
