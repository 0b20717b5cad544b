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

#include "mfvucl/inventory.hpp"

#include <cmath>

#include "mfvucl/core.hpp"

namespace mfvucl {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw InvalidArgument(std::string(name) + " must be positive and finite");
}

double checked(double v, const char* what) {
  if (!std::isfinite(v))
    throw NumericError(std::string(what) + " is not finite");
  return v;
}

}  // namespace

void InventoryInputs::validate() const {
  if (!(volume >= 0.0) || !std::isfinite(volume))
    throw InvalidArgument("volume must be >= 0 and finite");
  require_positive(density, "density");
  require_positive(concentration, "concentration");
  require_positive(specific_activity, "specific activity");
  require_positive(exemption_threshold, "exemption threshold");
  if (!(specific_activity_uncertainty >= 0.0) ||
      !std::isfinite(specific_activity_uncertainty))
    throw InvalidArgument("specific activity uncertainty must be >= 0");
}

InventoryReport estimate_inventory(const InventoryInputs& inputs) {
  inputs.validate();
  InventoryReport r;
  r.inputs = inputs;
  // m^3 * kg/m^3 -> kg; kg * Bq/kg -> Bq; Bq / (Bq/g) -> g
  r.total_mass = checked(inputs.volume * inputs.density, "total mass");
  r.total_activity =
      checked(r.total_mass * inputs.concentration, "total activity");
  r.fissile_mass =
      checked(r.total_activity / inputs.specific_activity, "fissile mass");
  r.fissile_mass_uncertainty = checked(
      r.fissile_mass * inputs.specific_activity_uncertainty /
          inputs.specific_activity,
      "fissile mass uncertainty");
  r.exempt = r.fissile_mass < inputs.exemption_threshold;
  return r;
}

}  // namespace mfvucl
