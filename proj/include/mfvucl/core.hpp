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

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfvucl {

// Error hierarchy. The C API maps each class onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (files, flags, argument values).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Statistical precondition violated (too few points, zero uncertainty for
// HPB, undefined standard deviation, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

/// A concentration value with its absolute 1-sigma uncertainty.
struct Measurement {
  double value = 0.0;
  double uncertainty = 0.0;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// Non-empty ordered collection of measurements sharing one unit.
///
/// `has_uncertainty` is false when the source carried no uncertainty column;
/// the uncertainties are then all zero and methods that need a recorded
/// uncertainty refuse to run.
class Dataset {
 public:
  Dataset(std::vector<Measurement> measurements, std::string unit = {},
          std::string label = {}, bool has_uncertainty = true);

  static Dataset from_values(std::span<const double> values,
                             std::string unit = {}, std::string label = {});

  const std::vector<Measurement>& measurements() const noexcept {
    return measurements_;
  }
  const std::string& unit() const noexcept { return unit_; }
  const std::string& label() const noexcept { return label_; }
  bool has_uncertainty() const noexcept { return has_uncertainty_; }
  std::size_t size() const noexcept { return measurements_.size(); }

  std::vector<double> values() const;
  std::vector<double> uncertainties() const;

  // Copy restricted to the given indices, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Measurement> measurements_;
  std::string unit_;
  std::string label_;
  bool has_uncertainty_;
};

struct SummaryStats {
  double mean = 0.0;
  std::optional<double> std_dev;  // sample (n-1); absent for n == 1
  std::size_t n = 0;
  double min = 0.0;
  double max = 0.0;
};

SummaryStats summarize(std::span<const double> values);
SummaryStats summarize(const Dataset& dataset);

double median(std::span<const double> values);

/// Linear interpolation between order statistics at position (n-1)*p
/// ("type 7"). `sorted` must be ascending and non-empty.
double interpolated_quantile(std::span<const double> sorted, double p);

}  // namespace mfvucl
