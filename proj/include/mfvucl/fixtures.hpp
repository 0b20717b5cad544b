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

#include <string_view>
#include <vector>

#include "mfvucl/core.hpp"

namespace mfvucl {

// Bundled datasets: u235_full (30), u235_trimmed (26), u235_small (9),
// granite_density (5). The same CSV text ships under data/.
std::vector<std::string_view> bundled_fixture_names();
std::string_view bundled_fixture_csv(std::string_view name);
Dataset load_fixture(std::string_view name);

}  // namespace mfvucl
