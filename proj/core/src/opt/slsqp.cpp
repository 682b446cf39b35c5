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

// Powell-damped BFGS update of the Hessian approximation B.
void damped_update(Eigen::MatrixXd &b, const Eigen::VectorXd &s, const Eigen::VectorXd &y) {
    const Eigen::VectorXd bs = b * s;
    const double sbs = s.dot(bs);
    if (!(sbs > 0.0)) {
        return;
    }
    const double sy = s.dot(y);
    Eigen::VectorXd r = y;
    if (sy < 0.2 * sbs) {
        const double t = 0.8 * sbs / (sbs - sy);
        r = t * y + (1.0 - t) * bs;
    }
    const double sr = s.dot(r);
    if (!(sr > 0.0)) {
        return;
    }
    b += r * r.transpose() / sr - bs * bs.transpose() / sbs;
}

}  // namespace

OptResult slsqp_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec) {
    spec.validate();
    detail::check_start(theta0);
    const auto n = static_cast<Eigen::Index>(theta0.size());
    detail::Evaluator ev(cost, evaluation_budget(spec, theta0.size()));
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);

    auto result = detail::run_guarded(ev, [&](std::size_t &iterations) -> detail::Outcome {
        Eigen::VectorXd x = detail::to_vector(theta0);
        double f = ev(x);
        Eigen::VectorXd g = detail::gradient(ev, x, spec.gradient_step);
        for (iterations = 0; iterations < spec.maxiter; ++iterations) {
            if (g.norm() < kGradientTolerance) {
                return {true, "gradient norm below tolerance"};
            }
            // Quadratic subproblem: minimize g'd + d'Bd/2, solved exactly.
            Eigen::LLT<Eigen::MatrixXd> llt(b);
            if (llt.info() != Eigen::Success) {
                b.setIdentity();
                llt.compute(b);
            }
            const Eigen::VectorXd d = llt.solve(-g);
            const double slope = g.dot(d);

            // Backtracking with safeguarded quadratic interpolation.
            double alpha = 1.0;
            Eigen::VectorXd x_new;
            double f_new = 0.0;
            bool accepted = false;
            for (int bt = 0; bt <= kMaxBacktracks; ++bt) {
                x_new = x + alpha * d;
                f_new = ev(x_new);
                if (f_new <= f + kArmijo * alpha * slope) {
                    accepted = true;
                    break;
                }
                const double denom = 2.0 * (f_new - f - alpha * slope);
                double next = denom > 0.0 ? -slope * alpha * alpha / denom : 0.5 * alpha;
                alpha = std::clamp(next, 0.1 * alpha, 0.5 * alpha);
            }
            if (!accepted) {
                return {false, "line search failed after 30 backtracks"};
            }

            const Eigen::VectorXd g_new = detail::gradient(ev, x_new, spec.gradient_step);
            damped_update(b, x_new - x, g_new - g);

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
    result.inverse_hessian = b.inverse();
    return result;
}

}  // namespace vqn::opt
