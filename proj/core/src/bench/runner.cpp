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

#include "vqn/bench/runner.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "vqn/errors.hpp"

namespace vqn::bench {

std::uint64_t run_seed(std::string_view family, std::string_view optimizer, std::uint64_t seed) {
    std::string key;
    key.append(family).append("|").append(optimizer).append("|").append(std::to_string(seed));
    return splitmix64(fnv1a64(key));
}

RunRecord execute_run(const vqe::EnsembleContext &base, const FamilySpec &family, const OptimizerEntry &optimizer,
                      std::uint64_t seed, const ExperimentConfig &cfg) {
    RunRecord rec;
    rec.family = family.name;
    rec.optimizer = std::string(opt::optimizer_name(optimizer.spec.kind));
    rec.seed = seed;

    const std::uint64_t root = run_seed(rec.family, rec.optimizer, seed);
    const vqe::EnsembleContext ctx = base.with_estimator(family.estimator);
    opt::OptimizerSpec spec = optimizer.spec;
    if (optimizer.auto_gradient_step) {
        spec.gradient_step = family.estimator.is_exact() ? kExactGradientStep : kShotGradientStep;
    }

    std::vector<double> theta0(ctx.n_params(), 0.0);
    if (cfg.theta0 == Theta0Policy::uniform) {
        Rng init(derive_seed(root, 3));
        std::uniform_real_distribution<double> u(cfg.theta0_min, cfg.theta0_max);
        for (auto &t : theta0) {
            t = u(init);
        }
    }

    vqe::EnsembleObjective objective(ctx, derive_seed(root, 1));
    Rng opt_rng(derive_seed(root, 2));
    const opt::CostFunction cost = [&objective](std::span<const double> th) { return objective(th); };

    const auto start = std::chrono::steady_clock::now();
    try {
        const opt::OptResult res = opt::minimize(cost, theta0, spec, opt_rng);
        const vqe::ResolvedEnergies e = vqe::resolve_states(res.theta_best, ctx);
        rec.e_ground = e.e0;
        rec.e_excited = e.e1;
        rec.e_sa = e.e0 + e.e1;
        rec.n_evals = res.n_evals;
        rec.converged = res.converged;
        if (!res.converged) {
            rec.diagnostic = res.message;
        }
    } catch (const std::exception &err) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        rec.e_ground = rec.e_excited = rec.e_sa = nan;
        rec.n_evals = objective.evaluations();
        rec.converged = false;
        rec.diagnostic = err.what();
    }
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig &cfg, const RunOptions &options) {
    cfg.validate();
    const vqe::EnsembleContext base(qsim::PauliSum::load(cfg.hamiltonian_path),
                                    qsim::Circuit::load(cfg.circuit_path), cfg.phi_a, cfg.phi_b);

    struct Task {
        std::size_t family, optimizer;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t f = 0; f < cfg.families.size(); ++f) {
        for (std::size_t o = 0; o < cfg.optimizers.size(); ++o) {
            for (auto s : cfg.seeds) {
                tasks.push_back({f, o, s});
            }
        }
    }

    std::vector<std::optional<RunRecord>> slots(tasks.size());
    std::mutex mu;
    std::size_t next_emit = 0;
    std::atomic<std::size_t> next_task{0};

    auto worker = [&] {
        for (std::size_t i = next_task++; i < tasks.size(); i = next_task++) {
            const Task &t = tasks[i];
            RunRecord rec = execute_run(base, cfg.families[t.family], cfg.optimizers[t.optimizer], t.seed, cfg);
            std::lock_guard lock(mu);
            slots[i] = std::move(rec);
            while (next_emit < slots.size() && slots[next_emit]) {
                if (options.on_record) {
                    options.on_record(*slots[next_emit]);
                }
                ++next_emit;
            }
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }

    std::vector<RunRecord> out;
    out.reserve(slots.size());
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace vqn::bench
