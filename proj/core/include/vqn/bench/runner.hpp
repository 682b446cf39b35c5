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
#include <functional>
#include <string_view>
#include <vector>

#include "vqn/bench/config.hpp"
#include "vqn/bench/run_record.hpp"
#include "vqn/vqe/ensemble.hpp"

namespace vqn::bench {

/// Stable 64-bit seed for one (family, optimizer, seed) cell.
std::uint64_t run_seed(std::string_view family, std::string_view optimizer, std::uint64_t seed);

/// One optimization session. Never throws for a failing run: the record
/// carries converged = false, NaN energies and a diagnostic instead.
RunRecord execute_run(const vqe::EnsembleContext &base, const FamilySpec &family, const OptimizerEntry &optimizer,
                      std::uint64_t seed, const ExperimentConfig &cfg);

struct RunOptions {
    std::size_t jobs = 1;
    /// Called once per record, serialized, in (family, optimizer, seed) order.
    std::function<void(const RunRecord &)> on_record;
};

/// Loads the problem files and runs every cell. Output order and content
/// are independent of `jobs`.
std::vector<RunRecord> run_experiment(const ExperimentConfig &cfg, const RunOptions &options = {});

}  // namespace vqn::bench
