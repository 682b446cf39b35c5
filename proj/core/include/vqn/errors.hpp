// Copyright 2026 The vqn-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vqn {

/// A numeric parameter lies outside its mathematical domain (probability
/// outside [0,1], non-positive duration, ...).
class ParameterDomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Operands do not fit together (dimension or arity mismatch, bad indices).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Channel parameters that cannot be realized as a CPTP map.
class InvalidChannelError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Problem size beyond what the dense routines accept.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Sample is rank-deficient or otherwise unusable for the requested statistic.
class DegenerateSampleError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent configuration / input file.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed data file (run records).
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A cost function returned NaN. Carries the offending parameter vector.
class NonFiniteCostError : public std::runtime_error {
  public:
    NonFiniteCostError(const std::string &what, std::vector<double> theta)
        : std::runtime_error(what), theta_(std::move(theta)) {}
    const std::vector<double> &theta() const noexcept { return theta_; }

  private:
    std::vector<double> theta_;
};

}  // namespace vqn
