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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "vqn/errors.hpp"
#include "vqn/opt/optimizer.hpp"

namespace {

using namespace vqn::opt;

constexpr OptimizerKind kLocal[] = {OptimizerKind::bfgs, OptimizerKind::slsqp, OptimizerKind::nelder_mead,
                                    OptimizerKind::powell, OptimizerKind::cobyla};
constexpr OptimizerKind kAll[] = {OptimizerKind::bfgs,   OptimizerKind::slsqp,  OptimizerKind::nelder_mead,
                                  OptimizerKind::powell, OptimizerKind::cobyla, OptimizerKind::isoma};

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

double rosenbrock(std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
}

double rastrigin(std::span<const double> x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * M_PI * v);
    }
    return s;
}

// f = 0.5 x'Ax - b'x with A SPD.
struct Quadratic {
    Eigen::MatrixXd a;
    Eigen::VectorXd b;
    double operator()(std::span<const double> x) const {
        const Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
        return 0.5 * v.dot(a * v) - b.dot(v);
    }
    Eigen::VectorXd minimizer() const { return a.ldlt().solve(b); }
    double minimum() const { return -0.5 * b.dot(minimizer()); }
};

Quadratic spd_quadratic() {
    Eigen::MatrixXd a(3, 3);
    a << 4, 1, 0.5, 1, 3, 0.2, 0.5, 0.2, 2;
    Eigen::VectorXd b(3);
    b << 1, -2, 0.5;
    return {a, b};
}

OptimizerSpec spec_for(OptimizerKind kind, std::size_t maxiter = 500) {
    OptimizerSpec s;
    s.kind = kind;
    s.maxiter = maxiter;
    return s;
}

std::string name_of(OptimizerKind k) {
    return std::string(optimizer_name(k));
}

TEST(Names, RoundTrip) {
    for (auto k : kAll) {
        EXPECT_EQ(parse_optimizer_kind(optimizer_name(k)), k);
    }
    EXPECT_FALSE(parse_optimizer_kind("adam").has_value());
}

TEST(Spec, ValidateRejectsBadSettings) {
    OptimizerSpec s;
    s.maxiter = 0;
    EXPECT_THROW(s.validate(), vqn::ParameterDomainError);
    s = OptimizerSpec{};
    s.gradient_step = 0.0;
    EXPECT_THROW(s.validate(), vqn::ParameterDomainError);
    s = OptimizerSpec{};
    s.kind = OptimizerKind::isoma;
    s.isoma.var_min = 1.0;
    s.isoma.var_max = -1.0;
    EXPECT_THROW(s.validate(), vqn::ParameterDomainError);
}

TEST(Bfgs, SphereConvergesFast) {
    const std::vector<double> x0 = {1.0, -2.0, 0.5};
    const auto r = bfgs_minimize(sphere, x0, spec_for(OptimizerKind::bfgs));
    EXPECT_LT(r.f_best, 1e-12);
    EXPECT_LT(r.n_evals, 100u);
    EXPECT_TRUE(r.converged);
}

TEST(Bfgs, InverseHessianSatisfiesSecantOnQuadratic) {
    const auto q = spd_quadratic();
    const std::vector<double> x0 = {2.0, 2.0, -1.0};
    const auto r = bfgs_minimize(q, x0, spec_for(OptimizerKind::bfgs));
    ASSERT_EQ(r.inverse_hessian.rows(), 3);
    const Eigen::Map<const Eigen::VectorXd> xb(r.theta_best.data(), 3);
    EXPECT_LT((xb - q.minimizer()).norm(), 1e-5);
    // The inverse-Hessian estimate maps the gradient back to the step to the minimizer.
    const Eigen::VectorXd g = q.a * xb - q.b;
    EXPECT_LT((r.inverse_hessian * g).norm(), 1e-4);
    const Eigen::MatrixXd h = r.inverse_hessian * q.a;
    EXPECT_TRUE(r.inverse_hessian.isApprox(r.inverse_hessian.transpose(), 1e-8));
    EXPECT_LT((h.diagonal().array() - 1.0).abs().maxCoeff(), 0.5);
}

TEST(LocalMethods, StationaryStartReturnsStart) {
    for (auto k : {OptimizerKind::bfgs, OptimizerKind::slsqp}) {
        const std::vector<double> x0 = {0.0, 0.0};
        vqn::Rng rng(0);
        const auto r = minimize(sphere, x0, spec_for(k), rng);
        EXPECT_TRUE(r.converged) << name_of(k);
        EXPECT_EQ(r.theta_best, x0) << name_of(k);
        EXPECT_EQ(r.f_best, 0.0) << name_of(k);
    }
}

TEST(LocalMethods, RosenbrockFromStandardStart) {
    const std::vector<double> x0 = {-1.2, 1.0};
    for (auto k : kLocal) {
        vqn::Rng rng(0);
        // Linear models crawl along the curved valley once rho has shrunk.
        const std::size_t maxiter = k == OptimizerKind::cobyla ? 20000 : 2000;
        const auto r = minimize(rosenbrock, x0, spec_for(k, maxiter), rng);
        const double tol = k == OptimizerKind::cobyla ? 1e-4 : 1e-6;
        EXPECT_LT(r.f_best, tol) << name_of(k) << ": " << r.message;
    }
}

TEST(LocalMethods, NoisyQuadraticWithinNoiseFloor) {
    const double sigma = 1e-3;
    for (auto k : kLocal) {
        std::mt19937_64 gen(99);
        std::normal_distribution<double> noise(0.0, sigma);
        auto f = [&](std::span<const double> x) { return sphere(x) + noise(gen); };
        OptimizerSpec s = spec_for(k, 200);
        s.gradient_step = 5e-2;
        vqn::Rng rng(0);
        const std::vector<double> x0 = {0.8, -0.6};
        const auto r = minimize(f, x0, s, rng);
        EXPECT_LT(std::abs(r.f_best), 10.0 * sigma) << name_of(k);
        EXPECT_LT(sphere(r.theta_best), 0.1) << name_of(k);
    }
}

TEST(LocalMethods, ConvexQuadraticReachesMinimum) {
    const auto q = spd_quadratic();
    const std::vector<double> x0 = {1.0, 1.0, 1.0};
    for (auto k : kAll) {
        vqn::Rng rng(1);
        OptimizerSpec s = spec_for(k, 5000);
        if (k == OptimizerKind::isoma) {
            s.isoma.max_fes = 5000;
            s.isoma.max_migration = 1000;
        }
        const auto r = minimize(q, x0, s, rng);
        const double tol = k == OptimizerKind::isoma ? 1e-2 : 1e-6;
        EXPECT_NEAR(r.f_best, q.minimum(), tol) << name_of(k);
    }
}

TEST(Slsqp, SphereAndSecant) {
    const std::vector<double> x0 = {1.0, -2.0, 0.5};
    const auto r = slsqp_minimize(sphere, x0, spec_for(OptimizerKind::slsqp));
    EXPECT_LT(r.f_best, 1e-12);
    EXPECT_LT(r.n_evals, 100u);
    const auto q = spd_quadratic();
    const auto rq = slsqp_minimize(q, x0, spec_for(OptimizerKind::slsqp));
    ASSERT_EQ(rq.inverse_hessian.rows(), 3);
    const Eigen::Map<const Eigen::VectorXd> xb(rq.theta_best.data(), 3);
    EXPECT_LT((xb - q.minimizer()).norm(), 1e-5);
}

TEST(NelderMead, OneDimensionalConvexNeedsNoShrink) {
    auto f = [](std::span<const double> x) { return (x[0] - 3.0) * (x[0] - 3.0); };
    const std::vector<double> x0 = {0.0};
    const auto r = nelder_mead_minimize(f, x0, spec_for(OptimizerKind::nelder_mead));
    EXPECT_EQ(r.shrinks, 0u);
    EXPECT_NEAR(r.theta_best[0], 3.0, 1e-4);
}

TEST(Powell, SeparableQuadraticInTwoCycles) {
    auto f = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0) + 0.5 * x[2] * x[2];
    };
    const std::vector<double> x0 = {0.0, 0.0, 0.0};
    const auto r = powell_minimize(f, x0, spec_for(OptimizerKind::powell));
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.iterations, 2u);
    EXPECT_LT(r.f_best, 1e-10);
}

TEST(Powell, InvariantUnderAxisPermutation) {
    auto f = [](std::span<const double> x) {
        return std::pow(x[0] - 1.0, 2) + 3.0 * std::pow(x[1] + 0.5, 2) + 0.3 * x[0] * x[1];
    };
    auto g = [&](std::span<const double> y) {
        const double x[] = {y[1], y[0]};
        return f(x);
    };
    const std::vector<double> x0 = {0.2, 0.4};
    const std::vector<double> y0 = {0.4, 0.2};
    const auto rf = powell_minimize(f, x0, spec_for(OptimizerKind::powell));
    const auto rg = powell_minimize(g, y0, spec_for(OptimizerKind::powell));
    EXPECT_NEAR(rf.theta_best[0], rg.theta_best[1], 1e-6);
    EXPECT_NEAR(rf.theta_best[1], rg.theta_best[0], 1e-6);
}

TEST(Cobyla, LinearFunctionFirstStepAlongNegativeGradient) {
    const double gx = 2.0, gy = -1.0;
    auto f = [&](std::span<const double> x) { return gx * x[0] + gy * x[1]; };
    const std::vector<double> x0 = {0.0, 0.0};
    const auto r = cobyla_minimize(f, x0, spec_for(OptimizerKind::cobyla, 1));
    // Initial simplex plus one trial step taken from the best vertex, x0 + 0.5 e_y.
    ASSERT_EQ(r.n_evals, 4u);
    const double norm = std::hypot(gx, gy);
    const double dx = r.theta_best[0], dy = r.theta_best[1] - 0.5;
    const double len = std::hypot(dx, dy);
    ASSERT_GT(len, 0.0);
    EXPECT_NEAR(dx / len, -gx / norm, 1e-9);
    EXPECT_NEAR(dy / len, -gy / norm, 1e-9);
}

TEST(Isoma, RastriginBeatsRandomSearch) {
    OptimizerSpec s = spec_for(OptimizerKind::isoma);
    s.isoma.var_min = -5.12;
    s.isoma.var_max = 5.12;
    int wins = 0;
    for (int seed = 0; seed < 10; ++seed) {
        vqn::Rng rng(static_cast<std::uint64_t>(seed));
        const std::vector<double> x0 = {3.0, -3.0};
        const auto r = isoma_minimize(rastrigin, x0, s, rng);
        EXPECT_LE(r.n_evals, 750u);
        std::mt19937_64 gen(1000 + seed);
        std::uniform_real_distribution<double> u(-5.12, 5.12);
        double best_random = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 25; ++k) {
            const double p[] = {u(gen), u(gen)};
            best_random = std::min(best_random, rastrigin(p));
        }
        wins += r.f_best < best_random ? 1 : 0;
    }
    EXPECT_GE(wins, 9);
}

TEST(Isoma, IncumbentIsMonotoneAndBudgetHolds) {
    OptimizerSpec s = spec_for(OptimizerKind::isoma);
    vqn::Rng rng(4);
    const std::vector<double> x0 = {1.0, 1.0, 1.0};
    const auto r = isoma_minimize(sphere, x0, s, rng);
    EXPECT_LE(r.n_evals, 750u);
    EXPECT_EQ(r.trace.size(), r.n_evals);
    double first = r.trace.front().f;
    EXPECT_LT(r.f_best, first);
    EXPECT_LT(r.f_best, sphere(x0));
}

TEST(Isoma, BoundsMismatchThrows) {
    OptimizerSpec s = spec_for(OptimizerKind::isoma);
    s.isoma.lower = {-1.0};
    s.isoma.upper = {1.0};
    vqn::Rng rng(0);
    const std::vector<double> x0 = {0.0, 0.0};
    EXPECT_THROW(isoma_minimize(sphere, x0, s, rng), vqn::UsageError);
}

TEST(FiniteDifference, ExactOnLinear) {
    auto f = [](std::span<const double> x) { return 3.0 * x[0] - 2.0 * x[1] + 0.5; };
    const std::vector<double> x = {0.7, -1.3};
    const auto g = finite_difference_gradient(f, x, 1e-3);
    EXPECT_NEAR(g[0], 3.0, 1e-10);
    EXPECT_NEAR(g[1], -2.0, 1e-10);
}

TEST(FiniteDifference, ZeroOnConstant) {
    auto f = [](std::span<const double>) { return 4.2; };
    const std::vector<double> x = {0.1, 0.2, 0.3};
    for (double v : finite_difference_gradient(f, x, 1e-4)) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(FiniteDifference, SecondOrderErrorUnderHalving) {
    auto f = [](std::span<const double> x) { return std::sin(x[0]) * std::exp(x[0]); };
    const std::vector<double> x = {0.4};
    const double exact = std::exp(0.4) * (std::sin(0.4) + std::cos(0.4));
    const double e1 = std::abs(finite_difference_gradient(f, x, 1e-2)[0] - exact);
    const double e2 = std::abs(finite_difference_gradient(f, x, 5e-3)[0] - exact);
    EXPECT_NEAR(e1 / e2, 4.0, 0.2);
}

TEST(FiniteDifference, PolynomialRelativeAccuracy) {
    auto f = [](std::span<const double> x) { return std::pow(x[0], 3) + x[0] * x[1] * x[1]; };
    const std::vector<double> x = {1.5, -0.5};
    const auto g = finite_difference_gradient(f, x, 1e-4);
    const double g0 = 3 * 1.5 * 1.5 + 0.25, g1 = 2 * 1.5 * -0.5;
    EXPECT_NEAR(g[0], g0, 1e-6 * std::abs(g0));
    EXPECT_NEAR(g[1], g1, 1e-6 * std::abs(g1));
    EXPECT_THROW(finite_difference_gradient(f, x, 0.0), vqn::ParameterDomainError);
}

TEST(AllMethods, DeterministicForFixedSeed) {
    const std::vector<double> x0 = {0.5, -0.5};
    for (auto k : kAll) {
        vqn::Rng a(12), b(12);
        const auto ra = minimize(rastrigin, x0, spec_for(k, 50), a);
        const auto rb = minimize(rastrigin, x0, spec_for(k, 50), b);
        EXPECT_EQ(ra.theta_best, rb.theta_best) << name_of(k);
        EXPECT_EQ(ra.n_evals, rb.n_evals) << name_of(k);
    }
}

TEST(AllMethods, BudgetAndMonotoneIncumbent) {
    const std::vector<double> x0 = {-1.2, 1.0};
    for (auto k : kAll) {
        for (std::size_t maxiter : {1u, 3u, 10u}) {
            vqn::Rng rng(3);
            OptimizerSpec s = spec_for(k, maxiter);
            const auto r = minimize(rosenbrock, x0, s, rng);
            EXPECT_LE(r.n_evals, evaluation_budget(s, 2)) << name_of(k);
            EXPECT_EQ(r.trace.size(), r.n_evals) << name_of(k);
            double running = std::numeric_limits<double>::infinity();
            for (const auto &p : r.trace) {
                running = std::min(running, p.f);
            }
            EXPECT_EQ(running, r.f_best) << name_of(k);
            EXPECT_EQ(rosenbrock(r.theta_best), r.f_best) << name_of(k);
            EXPECT_LE(r.f_best, rosenbrock(x0)) << name_of(k);
        }
    }
}

TEST(AllMethods, NanCostRaisesWithTheta) {
    const std::vector<double> x0 = {0.25, 0.5};
    for (auto k : kAll) {
        vqn::Rng rng(0);
        int calls = 0;
        auto f = [&](std::span<const double> x) {
            return ++calls > 3 ? std::numeric_limits<double>::quiet_NaN() : sphere(x);
        };
        try {
            minimize(f, x0, spec_for(k), rng);
            ADD_FAILURE() << name_of(k) << " did not raise";
        } catch (const vqn::NonFiniteCostError &e) {
            EXPECT_EQ(e.theta().size(), 2u) << name_of(k);
        }
    }
}

TEST(AllMethods, EmptyStartRejected) {
    vqn::Rng rng(0);
    for (auto k : kAll) {
        EXPECT_THROW(minimize(sphere, std::vector<double>{}, spec_for(k), rng), vqn::UsageError) << name_of(k);
    }
}

}  // namespace
