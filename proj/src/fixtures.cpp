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

#include "mfvucl/fixtures.hpp"

#include <array>
#include <utility>

#include "mfvucl/data_io.hpp"

namespace mfvucl {
namespace {

// Published U-235 activity concentrations (Bq/kg) in Eastern Desert granite
// and the matching granite densities, with 1-sigma uncertainties.
constexpr std::array<std::pair<std::string_view, std::string_view>, 4>
    kFixtures = {{
    {"u235_full",
     R"csv(# label: U-235 activity concentration in granite, 30 measurements
# unit: Bq/kg
value,uncertainty
1.90,0.18
2.03,0.19
1.92,0.18
1.87,0.17
2.41,0.22
1.37,0.13
2.16,0.20
2.14,0.20
1.16,0.11
2.18,0.20
2.31,0.21
2.23,0.21
1.23,0.11
2.43,0.22
2.13,0.20
2.10,0.19
1.28,0.12
1.96,0.18
1.94,0.18
2.41,0.22
2.29,0.21
2.70,0.25
2.20,0.20
2.08,0.19
2.40,0.22
2.40,0.22
4.21,0.39
4.83,0.44
2.48,0.23
2.27,0.21
)csv"},
    {"u235_trimmed",
     R"csv(# label: U-235 activity concentration, boxplot outliers removed (26)
# unit: Bq/kg
value,uncertainty
1.90,0.18
2.03,0.19
1.92,0.18
1.87,0.17
2.41,0.22
1.37,0.13
2.16,0.20
2.14,0.20
2.18,0.20
2.31,0.21
2.23,0.21
2.43,0.22
2.13,0.20
2.10,0.19
1.28,0.12
1.96,0.18
1.94,0.18
2.41,0.22
2.29,0.21
2.70,0.25
2.20,0.20
2.08,0.19
2.40,0.22
2.40,0.22
2.48,0.23
2.27,0.21
)csv"},
    {"u235_small",
     R"csv(# label: U-235 activity concentration, 9-element subset
# unit: Bq/kg
value,uncertainty
1.90,0.18
1.87,0.17
2.16,0.20
2.14,0.20
2.31,0.21
2.29,0.21
2.70,0.25
2.08,0.19
2.40,0.22
)csv"},
    {"granite_density",
     R"csv(# label: Granite density, 5 measurements
# unit: kg/m3
value,uncertainty
2617.07,8.74
2590.42,9.25
2612.28,4.72
2724.35,3.73
2748.23,3.18
)csv"},
    }};

}  // namespace

std::vector<std::string_view> bundled_fixture_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, text] : kFixtures) names.push_back(name);
  return names;
}

std::string_view bundled_fixture_csv(std::string_view name) {
  for (const auto& [n, text] : kFixtures)
    if (n == name) return text;
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

Dataset load_fixture(std::string_view name) {
  return load_dataset(bundled_fixture_csv(name), Format::csv, std::string(name));
}

}  // namespace mfvucl
