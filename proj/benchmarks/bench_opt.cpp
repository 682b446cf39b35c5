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


#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "vqn/opt/optimizer.hpp"
#include "vqn/qsim/circuit.hpp"
#include "vqn/qsim/pauli_sum.hpp"
#include "vqn/vqe/ensemble.hpp"

namespace {

using namespace vqn;

void BM_ToyMinimize(benchmark::State &state) {
    const auto kind = static_cast<opt::OptimizerKind>(state.range(0));
    const auto h = qsim::PauliSum::load(std::string(VQN_DATA_DIR) + "/toy_h.txt");
    const auto c = qsim::Circuit::load(std::string(VQN_DATA_DIR) + "/toy_ansatz.txt", 2);
    const vqe::EnsembleContext ctx(h, c, 0, 1);
    opt::OptimizerSpec spec;
    spec.kind = kind;
    const std::vector<double> theta0(3, 0.0);
    std::size_t evals = 0;
    for (auto _ : state) {
        vqe::EnsembleObjective f(ctx, 1);
        Rng rng(2);
        const auto r = opt::minimize([&](std::span<const double> t) { return f(t); }, theta0, spec, rng);
        evals = r.n_evals;
        benchmark::DoNotOptimize(r.f_best);
    }
    state.SetLabel(std::string(opt::optimizer_name(kind)));
    state.counters["evals"] = static_cast<double>(evals);
}
BENCHMARK(BM_ToyMinimize)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
