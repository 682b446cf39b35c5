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

#include "objective.hpp"

#include <cmath>

#include "vqn/errors.hpp"

namespace vqn::opt::detail {

double Evaluator::operator()(std::span<const double> x) {
    if (n_ >= budget_) {
        throw BudgetExhausted{};
    }
    const double f = cost_(x);
    ++n_;
    if (std::isnan(f)) {
        std::string where = "cost returned NaN at theta = (";
        for (std::size_t i = 0; i < x.size(); ++i) {
            where += (i ? ", " : "") + std::to_string(x[i]);
        }
        throw NonFiniteCostError(where + ")", std::vector<double>(x.begin(), x.end()));
    }
    trace_.push_back({n_, f});
    if (f < best_f_ || best_x_.empty()) {
        best_f_ = f;
        best_x_.assign(x.begin(), x.end());
    }
    return f;
}

OptResult Evaluator::finish(bool converged, std::size_t iterations, std::string message) {
    OptResult r;
    r.theta_best = std::move(best_x_);
    r.f_best = best_f_;
    r.n_evals = n_;
    r.converged = converged;
    r.iterations = iterations;
    r.trace = std::move(trace_);
    r.message = std::move(message);
    return r;
}

void check_start(std::span<const double> theta0) {
    if (theta0.empty()) {
        throw UsageError("optimizer needs a starting point of dimension >= 1");
    }
}

}  // namespace vqn::opt::detail
