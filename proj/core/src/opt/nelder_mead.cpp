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
#include <numeric>
#include <vector>

#include "objective.hpp"

namespace vqn::opt {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
constexpr double kSpreadTolerance = 1e-10;
constexpr double kDiameterTolerance = 1e-6;

}  // namespace

OptResult nelder_mead_minimize(const CostFunction &cost, std::span<const double> theta0,
                               const OptimizerSpec &spec) {
    spec.validate();
    detail::check_start(theta0);
    const std::size_t n = theta0.size();
    detail::Evaluator ev(cost, evaluation_budget(spec, n));
    std::size_t shrinks = 0;

    auto result = detail::run_guarded(ev, [&](std::size_t &iterations) -> detail::Outcome {
        std::vector<Eigen::VectorXd> x(n + 1, detail::to_vector(theta0));
        std::vector<double> f(n + 1);
        for (std::size_t i = 1; i <= n; ++i) {
            const auto k = static_cast<Eigen::Index>(i - 1);
            x[i][k] += 0.05 * std::max(1.0, std::abs(theta0[i - 1]));
        }
        for (std::size_t i = 0; i <= n; ++i) {
            f[i] = ev(x[i]);
        }

        std::vector<std::size_t> order(n + 1);
        for (iterations = 0; iterations < spec.maxiter; ++iterations) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
            {
                std::vector<Eigen::VectorXd> xs;
                std::vector<double> fs;
                for (auto i : order) {
                    xs.push_back(x[i]);
                    fs.push_back(f[i]);
                }
                x.swap(xs);
                f.swap(fs);
            }
            double diameter = 0.0;
            for (std::size_t i = 1; i <= n; ++i) {
                diameter = std::max(diameter, (x[i] - x[0]).lpNorm<Eigen::Infinity>());
            }
            if (f[n] - f[0] < kSpreadTolerance && diameter < kDiameterTolerance) {
                return {true, "simplex converged"};
            }

            Eigen::VectorXd centroid = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; ++i) {
                centroid += x[i];
            }
            centroid /= static_cast<double>(n);

            const Eigen::VectorXd xr = centroid + kReflect * (centroid - x[n]);
            const double fr = ev(xr);
            if (fr < f[0]) {
                const Eigen::VectorXd xe = centroid + kExpand * (centroid - x[n]);
                const double fe = ev(xe);
                if (fe < fr) {
                    x[n] = xe;
                    f[n] = fe;
                } else {
                    x[n] = xr;
                    f[n] = fr;
                }
                continue;
            }
            if (fr < f[n - 1]) {
                x[n] = xr;
                f[n] = fr;
                continue;
            }
            if (fr < f[n]) {
                const Eigen::VectorXd xc = centroid + kContract * (xr - centroid);
                const double fc = ev(xc);
                if (fc <= fr) {
                    x[n] = xc;
                    f[n] = fc;
                    continue;
                }
            } else {
                const Eigen::VectorXd xc = centroid + kContract * (x[n] - centroid);
                const double fc = ev(xc);
                if (fc < f[n]) {
                    x[n] = xc;
                    f[n] = fc;
                    continue;
                }
            }
            ++shrinks;
            for (std::size_t i = 1; i <= n; ++i) {
                x[i] = x[0] + kShrink * (x[i] - x[0]);
                f[i] = ev(x[i]);
            }
        }
        return {false, "maxiter reached"};
    });
    result.shrinks = shrinks;
    return result;
}

}  // namespace vqn::opt
