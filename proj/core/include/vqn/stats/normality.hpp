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

#include <utility>

#include "vqn/stats/types.hpp"

namespace vqn::stats {

struct MardiaResult {
    /// statistic = chi-square value n*b1/6; extras: b1.
    TestResult skewness;
    /// statistic = z_kurt; extras: b2.
    TestResult kurtosis;
};

/// Throws DegenerateSampleError when n < p + 2 or S is singular.
MardiaResult mardia_test(const Observations &x);

}  // namespace vqn::stats
