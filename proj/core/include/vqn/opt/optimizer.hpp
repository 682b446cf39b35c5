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
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "vqn/random.hpp"

namespace vqn::opt {

using CostFunction = std::function<double(std::span<const double>)>;

enum class OptimizerKind { bfgs, slsqp, nelder_mead, powell, cobyla, isoma };

std::string_view optimizer_name(OptimizerKind kind) noexcept;
std::optional<OptimizerKind> parse_optimizer_kind(std::string_view name) noexcept;

struct IsomaParams {
    std::size_t n_jump = 10;
    double step = 0.11;
    std::size_t pop_size = 25;
    std::size_t max_migration = 30;
    std::size_t max_fes = 750;
    double var_min = -2.0 * std::numbers::pi;
    double var_max = 2.0 * std::numbers::pi;
    std::size_t m = 15;  // individuals drawn per migration
    std::size_t n = 5;   // of those, how many migrate
    std::size_t k = 10;  // tournament size for leader selection
    double prt = 0.3;    // per-coordinate perturbation probability
    /// Optional per-coordinate bounds overriding var_min/var_max.
    std::vector<double> lower;
    std::vector<double> upper;
};

struct OptimizerSpec {
    OptimizerKind kind = OptimizerKind::bfgs;
    std::size_t maxiter = 500;
    double ftol = 1e-8;
    /// Central-difference step for gradient-based methods.
    double gradient_step = 1e-6;
    IsomaParams isoma;

    /// Throws ParameterDomainError on out-of-range settings.
    void validate() const;
};

struct TracePoint {
    std::size_t eval_index = 0;
    double f = 0.0;
};

struct OptResult {
    std::vector<double> theta_best;
    double f_best = 0.0;
    std::size_t n_evals = 0;
    bool converged = false;
    std::size_t iterations = 0;
    /// Every evaluation in call order.
    std::vector<TracePoint> trace;
    std::string message;
    /// Final inverse-Hessian approximation (bfgs, slsqp); empty otherwise.
    Eigen::MatrixXd inverse_hessian;
    /// Shrink steps taken (nelder_mead only).
    std::size_t shrinks = 0;
};

/// Hard cap on cost evaluations for `spec` in `dim` dimensions. No optimizer
/// ever calls the cost more often.
///
/// bfgs/slsqp: 1 + 2d + maxiter * (2d + 31)  (gradient + 31 line-search probes)
/// nelder_mead: (d + 1) + maxiter * (d + 2)  (worst case is a shrink)
/// powell:      1 + maxiter * (d + 1) * 120  (line searches of <= 120 probes)
/// cobyla:      (d + 1) + maxiter            (one probe per iteration)
/// isoma:       max_fes
std::size_t evaluation_budget(const OptimizerSpec &spec, std::size_t dim);

/// Dispatches on spec.kind. `rng` drives stochastic methods only.
/// Throws NonFiniteCostError if the cost returns NaN.
OptResult minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec, Rng &rng);

OptResult bfgs_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec);
OptResult slsqp_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec);
OptResult nelder_mead_minimize(const CostFunction &cost, std::span<const double> theta0,
                               const OptimizerSpec &spec);
OptResult powell_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec);
OptResult cobyla_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec);
/// theta0 only fixes the dimension; the population starts uniform in bounds.
OptResult isoma_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec,
                         Rng &rng);

/// Central differences; 2 * dim evaluations.
std::vector<double> finite_difference_gradient(const CostFunction &cost, std::span<const double> theta, double h);

}  // namespace vqn::opt
