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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "objective.hpp"

namespace vqn::opt {
namespace {

constexpr double kRhoBegin = 0.5;
constexpr double kRhoEnd = 1e-8;
constexpr double kFarFactor = 2.1;
constexpr double kFlatFactor = 0.25;
constexpr double kPoorRatio = 0.1;
constexpr double kEdgeFactor = 1.1;
constexpr double kGeometryStep = 0.5;

}  // namespace

OptResult cobyla_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec) {
    spec.validate();
    detail::check_start(theta0);
    const auto n = static_cast<Eigen::Index>(theta0.size());
    detail::Evaluator ev(cost, evaluation_budget(spec, theta0.size()));

    return detail::run_guarded(ev, [&](std::size_t &iterations) -> detail::Outcome {
        double rho = kRhoBegin;
        std::vector<Eigen::VectorXd> x(static_cast<std::size_t>(n) + 1, detail::to_vector(theta0));
        std::vector<double> f(x.size());
        for (Eigen::Index i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i) + 1][i] += rho;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            f[i] = ev(x[i]);
        }

        bool need_geometry = false;
        for (iterations = 0; iterations < spec.maxiter; ++iterations) {
            const auto best = static_cast<std::size_t>(std::min_element(f.begin(), f.end()) - f.begin());
            std::swap(x[0], x[best]);
            std::swap(f[0], f[best]);

            // Rows of D are the edges from the best vertex; W = D^{-1}.
            Eigen::MatrixXd d(n, n);
            Eigen::VectorXd df(n);
            for (Eigen::Index j = 0; j < n; ++j) {
                d.row(j) = (x[static_cast<std::size_t>(j) + 1] - x[0]).transpose();
                df[j] = f[static_cast<std::size_t>(j) + 1] - f[0];
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
            const bool invertible = lu.isInvertible();
            Eigen::MatrixXd w = invertible ? Eigen::MatrixXd(lu.inverse()) : Eigen::MatrixXd::Zero(n, n);
            const Eigen::VectorXd g = invertible ? Eigen::VectorXd(w * df) : Eigen::VectorXd::Zero(n);

            Eigen::Index far_j = 0, flat_j = 0;
            double far_dist = 0.0, flat_dist = std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < n; ++j) {
                const double dist = d.row(j).norm();
                const double face = invertible ? 1.0 / w.col(j).norm() : 0.0;
                if (dist > far_dist) {
                    far_dist = dist;
                    far_j = j;
                }
                if (face < flat_dist) {
                    flat_dist = face;
                    flat_j = j;
                }
            }
            const bool acceptable = invertible && far_dist <= kFarFactor * rho && flat_dist >= kFlatFactor * rho;

            if (need_geometry && !acceptable) {
                // Replace the worst-placed vertex by a step of length rho/2
                // normal to the opposite face, downhill on the model.
                const Eigen::Index j = far_dist > kFarFactor * rho ? far_j : flat_j;
                Eigen::VectorXd dir;
                if (invertible) {
                    dir = w.col(j).normalized();
                    if (g.dot(dir) > 0.0) {
                        dir = -dir;
                    }
                } else {
                    dir = Eigen::VectorXd::Unit(n, j);
                }
                const auto slot = static_cast<std::size_t>(j) + 1;
                x[slot] = x[0] + kGeometryStep * rho * dir;
                f[slot] = ev(x[slot]);
                need_geometry = false;
                continue;
            }

            const double gnorm = g.norm();
            bool reduce = false;
            if (!invertible || gnorm == 0.0) {
                reduce = acceptable;
                need_geometry = !acceptable;
            } else {
                const Eigen::VectorXd step = -rho * g / gnorm;
                const Eigen::VectorXd xt = x[0] + step;
                const double ft = ev(xt);
                const double predicted = rho * gnorm;
                const double actual = f[0] - ft;

                // Vertex to drop: largest |lambda_j| (the step's coordinates in
                // the edge basis); a failed trial enters only when |lambda_j| > 1.
                // Among vertices whose face distance stays adequate, one farther
                // than 1.1 rho from the new point takes precedence.
                const Eigen::VectorXd lambda = w.transpose() * step;
                Eigen::Index drop = -1;
                double best_lambda = actual > 0.0 ? 0.0 : 1.0;
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (std::abs(lambda[j]) > best_lambda) {
                        best_lambda = std::abs(lambda[j]);
                        drop = j;
                    }
                }
                double edge_max = kEdgeFactor * rho;
                for (Eigen::Index j = 0; j < n; ++j) {
                    const double vsig = 1.0 / w.col(j).norm();
                    const double sigbar = std::abs(lambda[j]) * vsig;
                    if (sigbar >= kFlatFactor * rho || sigbar >= vsig) {
                        const auto &vertex = x[static_cast<std::size_t>(j) + 1];
                        const double dist = actual > 0.0 ? (vertex - xt).norm() : d.row(j).norm();
                        if (dist > edge_max) {
                            edge_max = dist;
                            drop = j;
                        }
                    }
                }
                if (drop >= 0) {
                    const auto slot = static_cast<std::size_t>(drop) + 1;
                    x[slot] = xt;
                    f[slot] = ft;
                }
                if (actual > 0.0 && actual >= kPoorRatio * predicted) {
                    need_geometry = false;
                    continue;
                }
                reduce = acceptable;
                need_geometry = !acceptable;
            }

            if (reduce) {
                if (rho <= kRhoEnd) {
                    ++iterations;
                    return {true, "trust-region radius reached its final value"};
                }
                rho *= 0.5;
                if (rho <= 3.0 * kRhoEnd) {
                    rho = kRhoEnd;
                }
            }
        }
        return {false, "maxiter reached"};
    });
}

}  // namespace vqn::opt
