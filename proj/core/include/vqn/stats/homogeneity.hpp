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

#include <span>
#include <vector>

#include "vqn/stats/types.hpp"

namespace vqn::stats {

/// statistic = chi-square approximation M(1 - c); extras: M, c.
TestResult box_m_test(std::span<const Observations> groups);

enum class Center { mean, median };

/// One-way ANOVA on |y - center_i|. Levene for mean, Brown-Forsythe for median.
TestResult levene_like_test(std::span<const std::vector<double>> groups, Center center);

/// Per-coordinate Levene-like tests, one per column.
std::vector<TestResult> levene_like_by_column(std::span<const Observations> groups, Center center);

/// One-way ANOVA F for univariate groups; returns (F, df1, df2).
/// Zero within-group variation gives F = +inf (or 0 if also no between-group variation).
TestResult one_way_anova(std::span<const std::vector<double>> groups);

}  // namespace vqn::stats
