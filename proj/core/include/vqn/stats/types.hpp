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
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vqn::stats {

/// Observations as rows of an n x p matrix.
using Observations = Eigen::MatrixXd;

/// Points of one (family, optimizer) cell; columns are (e_ground, e_excited).
struct Sample2D {
    Observations points{0, 2};
    std::string family;
    std::string optimizer;

    std::size_t size() const noexcept { return static_cast<std::size_t>(points.rows()); }
};

struct TestResult {
    std::string test;
    double statistic = 0.0;
    std::vector<double> df;
    double p = 1.0;
    std::map<std::string, double> extras;
    std::vector<std::string> flags;

    bool flagged(const std::string &flag) const;
};

struct PairwiseMatrix {
    std::vector<std::string> labels;
    /// Symmetric; diagonal and failed pairs are NaN.
    Eigen::MatrixXd p_raw;
    Eigen::MatrixXd p_adjusted;
    std::string method;
    std::vector<std::string> diagnostics;
};

struct Ellipse {
    Eigen::Vector2d mu = Eigen::Vector2d::Zero();
    Eigen::Matrix2d sigma = Eigen::Matrix2d::Identity();
    double d95_sq = 0.0;
    std::size_t rejected_resamples = 0;
};

/// Group labels encoded as 0..g-1 in order of first appearance.
struct GroupCodes {
    std::vector<std::size_t> codes;
    std::vector<std::string> names;
    std::vector<std::size_t> sizes;
};

GroupCodes encode_groups(std::span<const std::string> labels);

/// Stacks samples row-wise and returns (points, codes keyed by family).
std::pair<Observations, GroupCodes> pool(std::span<const Sample2D> samples);

}  // namespace vqn::stats
