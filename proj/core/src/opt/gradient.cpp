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

#include <vector>

#include "objective.hpp"
#include "vqn/errors.hpp"

namespace vqn::opt {

std::vector<double> finite_difference_gradient(const CostFunction &cost, std::span<const double> theta, double h) {
    if (!(h > 0.0)) {
        throw ParameterDomainError("finite-difference step must be > 0");
    }
    std::vector<double> x(theta.begin(), theta.end());
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        x[i] = xi + h;
        const double f_plus = cost(x);
        x[i] = xi - h;
        const double f_minus = cost(x);
        x[i] = xi;
        g[i] = (f_plus - f_minus) / (2.0 * h);
    }
    return g;
}

namespace detail {

Eigen::VectorXd gradient(Evaluator &ev, const Eigen::VectorXd &x, double h) {
    const auto g = finite_difference_gradient(ev.as_cost(), std::span<const double>(x.data(), x.size()), h);
    return to_vector(g);
}

}  // namespace detail
}  // namespace vqn::opt
