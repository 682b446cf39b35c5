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

#include "vqn/stats/ellipse.hpp"

#include <random>
#include <vector>

#include "vqn/errors.hpp"
#include "vqn/stats/descriptive.hpp"

namespace vqn::stats {
namespace {

double reciprocal_condition(const Eigen::MatrixXd &sigma) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma, Eigen::EigenvaluesOnly);
    const double hi = es.eigenvalues().maxCoeff();
    const double lo = es.eigenvalues().minCoeff();
    return hi > 0.0 ? lo / hi : 0.0;
}

}  // namespace

Eigen::VectorXd mahalanobis_sq(const Observations &x, const Eigen::VectorXd &mu, const Eigen::MatrixXd &sigma) {
    const Eigen::MatrixXd centered = x.rowwise() - mu.transpose();
    const Eigen::MatrixXd solved = sigma.ldlt().solve(centered.transpose());
    return (centered.transpose().array() * solved.array()).colwise().sum().transpose();
}

Ellipse bootstrap_ellipse(const Observations &x, Rng &rng, std::size_t n_boot) {
    const auto n = x.rows();
    if (x.cols() != 2) {
        throw UsageError("bootstrap ellipse expects 2-column observations");
    }
    if (n < 3) {
        throw DegenerateSampleError("bootstrap ellipse needs n >= 3");
    }
    if (n_boot < 1) {
        throw ParameterDomainError("n_boot must be >= 1");
    }
    Ellipse e;
    e.mu = column_means(x);
    e.sigma = covariance(x);
    if (reciprocal_condition(e.sigma) < kDegenerateRcond) {
        throw DegenerateSampleError("bootstrap ellipse: covariance is singular (collinear points)");
    }

    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    std::vector<double> cutoffs;
    cutoffs.reserve(n_boot);
    Observations sample(n, 2);
    const std::size_t max_attempts = 10 * n_boot;
    std::size_t attempts = 0;
    while (cutoffs.size() < n_boot) {
        if (attempts++ >= max_attempts) {
            throw DegenerateSampleError("bootstrap ellipse: too many singular resamples");
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            sample.row(i) = x.row(pick(rng));
        }
        const Eigen::MatrixXd s = covariance(sample);
        if (reciprocal_condition(s) < kDegenerateRcond) {
            ++e.rejected_resamples;
            continue;
        }
        const Eigen::VectorXd d2 = mahalanobis_sq(sample, column_means(sample), s);
        cutoffs.push_back(quantile(std::span<const double>(d2.data(), static_cast<std::size_t>(d2.size())), 0.95));
    }
    e.d95_sq = median(cutoffs);
    return e;
}

bool ellipse_contains(const Ellipse &e, const Eigen::Vector2d &z) {
    const Eigen::Vector2d c = z - e.mu;
    return c.dot(e.sigma.ldlt().solve(c)) <= e.d95_sq;
}

}  // namespace vqn::stats
