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
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <string_view>
#include <vector>

#include "vqn/bench/catalog.hpp"
#include "vqn/opt/optimizer.hpp"

namespace vqn::bench {

enum class Theta0Policy { zeros, uniform };

struct OptimizerEntry {
    opt::OptimizerSpec spec;
    /// Pick the finite-difference step from the family's estimator.
    bool auto_gradient_step = true;
};

constexpr double kExactGradientStep = 1e-6;
constexpr double kShotGradientStep = 5e-2;

struct ExperimentConfig {
    std::filesystem::path hamiltonian_path;
    std::filesystem::path circuit_path;
    std::size_t phi_a = 0;
    std::size_t phi_b = 1;
    std::vector<FamilySpec> families;
    std::vector<OptimizerEntry> optimizers;
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    Theta0Policy theta0 = Theta0Policy::zeros;
    double theta0_min = -2.0 * std::numbers::pi;
    double theta0_max = 2.0 * std::numbers::pi;

    /// Throws ConfigError.
    void validate() const;
};

/// Relative paths inside the JSON resolve against `base_dir`.
ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path &base_dir);
ExperimentConfig load_config(const std::filesystem::path &path);

}  // namespace vqn::bench
