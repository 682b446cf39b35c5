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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqn/bench/run_record.hpp"

namespace vqn::bench {

struct AnalyzeOptions {
    std::size_t n_perm = 10000;
    std::size_t n_boot = 2000;
    std::uint64_t seed = 0;
};

/// Assumption checks, permutation tests, pairwise heatmaps and ellipses for
/// each optimizer, written to `<out_dir>/<optimizer>/`. Returns the number
/// of tests that could not be computed (recorded as errors in the JSON).
std::size_t analyze_runs(std::span<const RunRecord> records, const std::filesystem::path &out_dir,
                         const AnalyzeOptions &options, std::ostream &log);

/// Distance metrics, global Friedman/Kendall, Wilcoxon-Holm pairs and the
/// per-family tied-rank table, written to `out_dir`.
void rank_runs(std::span<const RunRecord> records, const Eigen::Vector2d &reference,
               const std::filesystem::path &out_dir, std::ostream &log);

}  // namespace vqn::bench
