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
#include <span>
#include <string>
#include <vector>

#include "vqn/stats/types.hpp"

namespace vqn::stats {

/// values: rows are blocks (categories), columns are methods.
/// statistic = chi-square; extras: W, mean_rank_<j>.
TestResult friedman_test(const Eigen::MatrixXd &values);

constexpr std::size_t kWilcoxonExactMax = 25;

/// statistic = W = min(W+, W-); extras: n (nonzero pairs), W_plus,
/// W_minus, median_diff, exact (0/1). Flag "degenerate" when all
/// differences vanish.
TestResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                std::size_t exact_threshold = kWilcoxonExactMax);

struct RankGroups {
    /// 1-based place per method (column order of the input).
    std::vector<std::size_t> place;
    TestResult friedman;
    /// Holm-adjusted pairwise Wilcoxon p, NaN diagonal; empty when the gate fails.
    Eigen::MatrixXd p_holm;
};

/// Lower values rank better. Places follow "previous place + group size".
RankGroups tied_rank_groups(const Eigen::MatrixXd &values, double alpha = 0.05);

}  // namespace vqn::stats
