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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqn/qsim/estimator.hpp"

namespace vqn::bench {

struct FamilySpec {
    std::string name;
    qsim::EstimatorSpec estimator;
};

constexpr std::size_t kDecoherenceShots = 6144;

/// The 21 standard families: ideal, SN-*, DP-*, DEPOL-*, T2=*, TR-T1=*.
std::vector<FamilySpec> family_catalog();

std::optional<FamilySpec> find_family(std::string_view name);

/// Short human-readable description of a family's estimator.
std::string describe(const FamilySpec &family);

}  // namespace vqn::bench
