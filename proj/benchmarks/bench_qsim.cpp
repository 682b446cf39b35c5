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

#include "vqn/bench/catalog.hpp"
#include "vqn/qsim/circuit.hpp"
#include "vqn/qsim/pauli_sum.hpp"
#include "vqn/vqe/ensemble.hpp"

namespace {

using namespace vqn;

vqe::EnsembleContext toy_context(const char *family) {
    const auto h = qsim::PauliSum::load(std::string(VQN_DATA_DIR) + "/toy_h.txt");
    const auto c = qsim::Circuit::load(std::string(VQN_DATA_DIR) + "/toy_ansatz.txt", 2);
    return vqe::EnsembleContext(h, c, 0, 1, bench::find_family(family)->estimator);
}

void BM_SaCost(benchmark::State &state, const char *family) {
    const auto ctx = toy_context(family);
    Rng rng(0);
    const std::vector<double> theta = {0.3, -0.4, 1.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(vqe::sa_cost(theta, ctx, rng));
    }
}
BENCHMARK_CAPTURE(BM_SaCost, ideal, "ideal");
BENCHMARK_CAPTURE(BM_SaCost, shots, "SN-1024");
BENCHMARK_CAPTURE(BM_SaCost, depolarizing, "DEPOL-5%");
BENCHMARK_CAPTURE(BM_SaCost, thermal, "TR-T1=100ns");

void BM_ResolveStatesNoisy(benchmark::State &state) {
    const auto ctx = toy_context("T2=80us");
    const std::vector<double> theta = {0.3, -0.4, 1.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(vqe::resolve_states(theta, ctx));
    }
}
BENCHMARK(BM_ResolveStatesNoisy);

}  // namespace

BENCHMARK_MAIN();
