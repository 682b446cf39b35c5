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

#include "vqn/random.hpp"
#include "vqn/stats/types.hpp"

namespace vqn::stats {

constexpr double kDegenerateRcond = 1e-10;

/// Squared Mahalanobis distance of each row to (mu, sigma).
Eigen::VectorXd mahalanobis_sq(const Observations &x, const Eigen::VectorXd &mu, const Eigen::MatrixXd &sigma);

/// Prediction ellipse {z : (z-mu)' sigma^-1 (z-mu) <= d95_sq}.
/// Throws DegenerateSampleError for n < 3 or near-singular covariance.
Ellipse bootstrap_ellipse(const Observations &x, Rng &rng, std::size_t n_boot = 2000);

bool ellipse_contains(const Ellipse &e, const Eigen::Vector2d &z);

}  // namespace vqn::stats
