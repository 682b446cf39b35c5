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

double mean(std::span<const double> v);
/// Sample standard deviation (n - 1); 0 for fewer than 2 values.
double sd(std::span<const double> v);
double median(std::span<const double> v);
/// Linear-interpolation quantile (Hyndman-Fan type 7), q in [0, 1].
double quantile(std::span<const double> v, double q);

Eigen::VectorXd column_means(const Observations &x);
/// Unbiased covariance (n - 1).
Eigen::MatrixXd covariance(const Observations &x);

/// Average ranks (1-based) with ties sharing the mean of their positions.
std::vector<double> average_ranks(std::span<const double> v);

}  // namespace vqn::stats
