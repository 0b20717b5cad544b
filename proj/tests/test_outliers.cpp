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
#include <vector>

#include "mfvucl/outliers.hpp"
#include "support.hpp"

using namespace mfvucl;

TEST_CASE("outliers of the 30-element set") {
  const auto p = iqr_partition(testing::full());
  std::vector<double> values;
  for (const auto& m : p.outliers) values.push_back(m.value);
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<double>{1.16, 1.23, 4.21, 4.83});
  CHECK(p.retained.size() == 26);
  CHECK(p.retained_indices.size() == 26);
  CHECK_NEAR(p.q1, 1.945, 1e-12);
  CHECK_NEAR(p.q3, 2.40, 1e-12);
  CHECK_NEAR(p.lower_fence, 1.2625, 1e-12);
  CHECK_NEAR(p.upper_fence, 3.0825, 1e-12);
  CHECK(p.k == 1.5);
}

TEST_CASE("retained side equals the published 26-element set") {
  const auto p = iqr_partition(testing::full());
  auto a = p.retained.values();
  auto b = testing::trimmed().values();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(p.retained.unit() == testing::full().unit());
}

TEST_CASE("outlier values keep their uncertainties") {
  const auto p = iqr_partition(testing::full());
  for (std::size_t i = 0; i < p.outlier_indices.size(); ++i)
    CHECK(p.outliers[i] == testing::full().measurements()[p.outlier_indices[i]]);
}

TEST_CASE("wide fences keep everything") {
  const auto p = iqr_partition(Dataset::from_values(std::vector<double>{1, 2, 3, 4}), 100.0);
  CHECK(p.outliers.empty());
  CHECK(p.retained.size() == 4);
}

TEST_CASE("values on a fence are retained") {
  // q1 = 4, q3 = 8, so the upper fence sits exactly at 14.
  const auto on = iqr_partition(Dataset::from_values(std::vector<double>{2, 4, 6, 8, 14}));
  CHECK(on.upper_fence == 14.0);
  CHECK(on.outliers.empty());
  const auto past =
      iqr_partition(Dataset::from_values(std::vector<double>{2, 4, 6, 8, 14.5}));
  CHECK(past.outlier_indices == std::vector<std::size_t>{4});
}

TEST_CASE("screening preconditions") {
  CHECK_THROWS_AS(iqr_partition(Dataset::from_values(std::vector<double>{1, 2, 3})),
                  PreconditionError);
  CHECK_THROWS_AS(iqr_partition(testing::full(), 0.0), InvalidArgument);
  CHECK_THROWS_AS(iqr_partition(testing::full(), -1.0), InvalidArgument);
}
