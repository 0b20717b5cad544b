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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <string>

#include "mfvucl/core.hpp"
#include "mfvucl/fixtures.hpp"

#define CHECK_NEAR(a, b, tol)                                  \
  do {                                                         \
    const double a_ = (a), b_ = (b);                           \
    INFO("lhs = " << a_ << ", rhs = " << b_ << ", tol = " << (tol)); \
    CHECK(std::abs(a_ - b_) <= (tol));                         \
  } while (0)

namespace testing {

inline std::filesystem::path data_dir() { return MFVUCL_TEST_DATA_DIR; }

inline const mfvucl::Dataset& full() {
  static const auto d = mfvucl::load_fixture("u235_full");
  return d;
}
inline const mfvucl::Dataset& trimmed() {
  static const auto d = mfvucl::load_fixture("u235_trimmed");
  return d;
}
inline const mfvucl::Dataset& small() {
  static const auto d = mfvucl::load_fixture("u235_small");
  return d;
}
inline const mfvucl::Dataset& granite() {
  static const auto d = mfvucl::load_fixture("granite_density");
  return d;
}

}  // namespace testing
