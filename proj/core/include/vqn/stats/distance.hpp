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

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vqn::stats {

struct DistancePoint {
    std::string optimizer;
    std::string family;
    Eigen::Vector2d energies;
};

struct CellDistance {
    std::string optimizer;
    std::string family;
    std::size_t n = 0;
    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
    double centroid_distance = 0.0;
    double rms = 0.0;
};

struct OptimizerDistance {
    std::string optimizer;
    double mean_centroid_distance = 0.0;
    /// Over all points of the optimizer.
    double rms = 0.0;
    double mean_place = 0.0;
    double sd_place = 0.0;
    std::size_t wins = 0;
};

struct DistanceReport {
    std::vector<CellDistance> cells;
    std::vector<OptimizerDistance> optimizers;
    /// Families not covered by every optimizer, or empty cells.
    std::vector<std::string> diagnostics;
};

/// Places per family rank optimizers by centroid distance (1 = closest,
/// ties averaged); only families populated for every optimizer are ranked.
DistanceReport distance_metrics(const std::vector<DistancePoint> &points, const Eigen::Vector2d &reference);

}  // namespace vqn::stats
