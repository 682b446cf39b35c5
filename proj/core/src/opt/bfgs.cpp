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

#include "objective.hpp"

namespace vqn::opt {
namespace {

constexpr int kMaxBacktracks = 30;
constexpr double kArmijo = 1e-4;
constexpr double kGradientTolerance = 1e-8;

}  // namespace

OptResult bfgs_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec) {
    spec.validate();
    detail::check_start(theta0);
    const auto n = static_cast<Eigen::Index>(theta0.size());
    detail::Evaluator ev(cost, evaluation_budget(spec, theta0.size()));
    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);

    auto result = detail::run_guarded(ev, [&](std::size_t &iterations) -> detail::Outcome {
        Eigen::VectorXd x = detail::to_vector(theta0);
        double f = ev(x);
        Eigen::VectorXd g = detail::gradient(ev, x, spec.gradient_step);
        bool scaled = false;
        for (iterations = 0; iterations < spec.maxiter; ++iterations) {
            if (g.norm() < kGradientTolerance) {
                return {true, "gradient norm below tolerance"};
            }
            Eigen::VectorXd p = -h_inv * g;
            double slope = g.dot(p);
            if (!(slope < 0.0)) {
                h_inv.setIdentity();
                p = -g;
                slope = -g.squaredNorm();
            }

            double alpha = 1.0;
            Eigen::VectorXd x_new;
            double f_new = 0.0;
            bool accepted = false;
            for (int bt = 0; bt <= kMaxBacktracks; ++bt) {
                x_new = x + alpha * p;
                f_new = ev(x_new);
                if (f_new <= f + kArmijo * alpha * slope) {
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) {
                return {false, "line search failed after 30 backtracks"};
            }

            const Eigen::VectorXd g_new = detail::gradient(ev, x_new, spec.gradient_step);
            const Eigen::VectorXd s = x_new - x;
            const Eigen::VectorXd y = g_new - g;
            const double sy = s.dot(y);
            if (sy > 1e-14 * s.norm() * y.norm() && sy > 0.0) {
                if (!scaled) {
                    h_inv *= sy / y.squaredNorm();
                    scaled = true;
                }
                const double rho = 1.0 / sy;
                const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(n, n) - rho * s * y.transpose();
                h_inv = left * h_inv * left.transpose() + rho * s * s.transpose();
            }

            const double f_prev = f;
            x = x_new;
            f = f_new;
            g = g_new;
            if (std::abs(f - f_prev) <= spec.ftol * std::max(1.0, std::abs(f))) {
                ++iterations;
                return {true, "relative function change below ftol"};
            }
        }
        return {false, "maxiter reached"};
    });
    result.inverse_hessian = h_inv;
    return result;
}

}  // namespace vqn::opt
