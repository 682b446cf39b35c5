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
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vqn/opt/optimizer.hpp"

namespace vqn::opt::detail {

/// Thrown by Evaluator when the evaluation budget is spent; caught by
/// run_guarded, never escapes the library.
struct BudgetExhausted {};

/// Counts, caps, and records every call to the user's cost function and
/// tracks the incumbent.
class Evaluator {
  public:
    Evaluator(const CostFunction &cost, std::size_t budget) : cost_(cost), budget_(budget) {}

    double operator()(std::span<const double> x);
    double operator()(const Eigen::VectorXd &x) { return (*this)(std::span<const double>(x.data(), x.size())); }

    /// The counted cost as a plain CostFunction (refers to *this).
    CostFunction as_cost() {
        return [this](std::span<const double> x) { return (*this)(x); };
    }

    std::size_t n_evals() const noexcept { return n_; }
    std::size_t remaining() const noexcept { return budget_ - n_; }
    double best_f() const noexcept { return best_f_; }

    OptResult finish(bool converged, std::size_t iterations, std::string message);

  private:
    const CostFunction &cost_;
    std::size_t budget_;
    std::size_t n_ = 0;
    std::vector<double> best_x_;
    double best_f_ = std::numeric_limits<double>::infinity();
    std::vector<TracePoint> trace_;
};

struct Outcome {
    bool converged = false;
    std::string message;
};

/// Runs an algorithm body `Outcome(std::size_t &iterations)`, turning budget
/// exhaustion into a non-converged result.
template <class Body>
OptResult run_guarded(Evaluator &ev, Body &&body) {
    std::size_t iterations = 0;
    Outcome out;
    try {
        out = body(iterations);
    } catch (const BudgetExhausted &) {
        out = {false, "evaluation budget exhausted"};
    }
    return ev.finish(out.converged, iterations, std::move(out.message));
}

inline Eigen::VectorXd to_vector(std::span<const double> x) {
    return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

Eigen::VectorXd gradient(Evaluator &ev, const Eigen::VectorXd &x, double h);

void check_start(std::span<const double> theta0);

}  // namespace vqn::opt::detail
