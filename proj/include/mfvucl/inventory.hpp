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

namespace mfvucl {

struct InventoryInputs {
  double volume = 0.0;                         // m^3
  double density = 0.0;                        // kg/m^3
  double concentration = 0.0;                  // Bq/kg
  double specific_activity = 0.0;              // Bq/g
  double specific_activity_uncertainty = 0.0;  // Bq/g, 1 sigma
  double exemption_threshold = 100.0;          // g

  void validate() const;
};

struct InventoryReport {
  InventoryInputs inputs;
  double total_mass = 0.0;      // kg
  double total_activity = 0.0;  // Bq
  double fissile_mass = 0.0;    // g
  // First-order propagation of the specific-activity uncertainty only.
  double fissile_mass_uncertainty = 0.0;  // g
  bool exempt = false;  // fissile_mass < exemption_threshold (strict)
};

InventoryReport estimate_inventory(const InventoryInputs& inputs);

}  // namespace mfvucl
