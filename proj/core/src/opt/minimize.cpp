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

#include <cmath>
#include <string>

#include "objective.hpp"
#include "vqn/errors.hpp"

namespace vqn::opt {

std::string_view optimizer_name(OptimizerKind kind) noexcept {
    switch (kind) {
        case OptimizerKind::bfgs: return "bfgs";
        case OptimizerKind::slsqp: return "slsqp";
        case OptimizerKind::nelder_mead: return "nelder_mead";
        case OptimizerKind::powell: return "powell";
        case OptimizerKind::cobyla: return "cobyla";
        case OptimizerKind::isoma: return "isoma";
    }
    return "unknown";
}

std::optional<OptimizerKind> parse_optimizer_kind(std::string_view name) noexcept {
    for (auto k : {OptimizerKind::bfgs, OptimizerKind::slsqp, OptimizerKind::nelder_mead, OptimizerKind::powell,
                   OptimizerKind::cobyla, OptimizerKind::isoma}) {
        if (optimizer_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

void OptimizerSpec::validate() const {
    if (maxiter < 1) {
        throw ParameterDomainError("maxiter must be >= 1");
    }
    if (!(ftol > 0.0)) {
        throw ParameterDomainError("ftol must be > 0");
    }
    if (!(gradient_step > 0.0)) {
        throw ParameterDomainError("gradient_step must be > 0");
    }
    if (kind != OptimizerKind::isoma) {
        return;
    }
    const IsomaParams &p = isoma;
    if (!(p.var_min < p.var_max)) {
        throw ParameterDomainError("isoma var_min must be < var_max");
    }
    if (p.pop_size < 2) {
        throw ParameterDomainError("isoma pop_size must be >= 2");
    }
    if (p.m > p.pop_size || p.n > p.m || p.k > p.pop_size) {
        throw ParameterDomainError("isoma requires m <= pop_size, n <= m, k <= pop_size");
    }
    if (p.n_jump < 1 || !(p.step > 0.0) || p.max_fes < 1) {
        throw ParameterDomainError("isoma n_jump, step, max_fes must be positive");
    }
    if (!(p.prt > 0.0 && p.prt <= 1.0)) {
        throw ParameterDomainError("isoma prt must be in (0, 1]");
    }
}

std::size_t evaluation_budget(const OptimizerSpec &spec, std::size_t dim) {
    const std::size_t d = dim;
    switch (spec.kind) {
        case OptimizerKind::bfgs:
        case OptimizerKind::slsqp: return 1 + 2 * d + spec.maxiter * (2 * d + 31);
        case OptimizerKind::nelder_mead: return (d + 1) + spec.maxiter * (d + 2);
        case OptimizerKind::powell: return 1 + spec.maxiter * (d + 1) * 120;
        case OptimizerKind::cobyla: return (d + 1) + spec.maxiter;
        case OptimizerKind::isoma: return spec.isoma.max_fes;
    }
    return 0;
}

OptResult minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec, Rng &rng) {
    switch (spec.kind) {
        case OptimizerKind::bfgs: return bfgs_minimize(cost, theta0, spec);
        case OptimizerKind::slsqp: return slsqp_minimize(cost, theta0, spec);
        case OptimizerKind::nelder_mead: return nelder_mead_minimize(cost, theta0, spec);
        case OptimizerKind::powell: return powell_minimize(cost, theta0, spec);
        case OptimizerKind::cobyla: return cobyla_minimize(cost, theta0, spec);
        case OptimizerKind::isoma: return isoma_minimize(cost, theta0, spec, rng);
    }
    throw UsageError("unknown optimizer kind");
}

}  // namespace vqn::opt
