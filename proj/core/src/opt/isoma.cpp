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
#include <numeric>
#include <random>
#include <vector>

#include "objective.hpp"
#include "vqn/errors.hpp"

namespace vqn::opt {
namespace {

std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> pool, std::size_t count, Rng &rng) {
    count = std::min(count, pool.size());
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace

OptResult isoma_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec,
                         Rng &rng) {
    spec.validate();
    detail::check_start(theta0);
    const IsomaParams &p = spec.isoma;
    const std::size_t dim = theta0.size();
    if ((!p.lower.empty() && p.lower.size() != dim) || (!p.upper.empty() && p.upper.size() != dim)) {
        throw UsageError("isoma bounds have dimension " + std::to_string(std::max(p.lower.size(), p.upper.size())) +
                         ", expected " + std::to_string(dim));
    }
    Eigen::VectorXd lo(static_cast<Eigen::Index>(dim)), hi(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        lo[static_cast<Eigen::Index>(i)] = p.lower.empty() ? p.var_min : p.lower[i];
        hi[static_cast<Eigen::Index>(i)] = p.upper.empty() ? p.var_max : p.upper[i];
        if (!(lo[static_cast<Eigen::Index>(i)] < hi[static_cast<Eigen::Index>(i)])) {
            throw UsageError("isoma lower bound must be below upper bound in every coordinate");
        }
    }
    detail::Evaluator ev(cost, evaluation_budget(spec, dim));

    auto result = detail::run_guarded(ev, [&](std::size_t &iterations) -> detail::Outcome {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<Eigen::VectorXd> pop(p.pop_size);
        std::vector<double> fit(p.pop_size);
        for (auto &ind : pop) {
            ind.resize(static_cast<Eigen::Index>(dim));
            for (Eigen::Index j = 0; j < ind.size(); ++j) {
                ind[j] = lo[j] + (hi[j] - lo[j]) * unit(rng);
            }
        }
        for (std::size_t i = 0; i < pop.size(); ++i) {
            fit[i] = ev(pop[i]);
        }

        std::vector<std::size_t> all(p.pop_size);
        std::iota(all.begin(), all.end(), 0);
        std::uniform_int_distribution<std::size_t> coord(0, dim - 1);
        for (iterations = 0; iterations < p.max_migration; ++iterations) {
            auto chosen = sample_without_replacement(all, p.m, rng);
            std::stable_sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
                return fit[a] < fit[b] || (fit[a] == fit[b] && a < b);
            });
            chosen.resize(std::min(p.n, chosen.size()));

            for (const std::size_t mig : chosen) {
                std::vector<std::size_t> others;
                for (std::size_t i = 0; i < p.pop_size; ++i) {
                    if (i != mig) {
                        others.push_back(i);
                    }
                }
                if (others.empty()) {
                    continue;
                }
                const auto tour = sample_without_replacement(others, p.k, rng);
                std::size_t leader = tour.front();
                for (const std::size_t c : tour) {
                    if (fit[c] < fit[leader] || (fit[c] == fit[leader] && c < leader)) {
                        leader = c;
                    }
                }

                const Eigen::VectorXd start = pop[mig];
                const Eigen::VectorXd toward = pop[leader] - start;
                Eigen::VectorXd best_x = start;
                double best_f = fit[mig];
                for (std::size_t t = 1; t <= p.n_jump; ++t) {
                    Eigen::VectorXd mask = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
                    for (Eigen::Index j = 0; j < mask.size(); ++j) {
                        mask[j] = unit(rng) < p.prt ? 1.0 : 0.0;
                    }
                    if (mask.sum() == 0.0) {
                        mask[static_cast<Eigen::Index>(coord(rng))] = 1.0;
                    }
                    Eigen::VectorXd trial = start + (static_cast<double>(t) * p.step) * toward.cwiseProduct(mask);
                    trial = trial.cwiseMax(lo).cwiseMin(hi);
                    const double ft = ev(trial);
                    if (ft < best_f) {
                        best_f = ft;
                        best_x = trial;
                    }
                }
                pop[mig] = best_x;
                fit[mig] = best_f;
            }
        }
        return {true, "maximum number of migrations reached"};
    });
    if (!result.converged) {
        // Exhausting max_fes is a regular stop for isoma.
        result.converged = true;
        result.message = "max_fes reached";
    }
    return result;
}

}  // namespace vqn::opt
