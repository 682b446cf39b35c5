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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "vqn/stats/ellipse.hpp"
#include "vqn/stats/permutation.hpp"
#include "vqn/stats/rank_tests.hpp"

namespace {

using namespace vqn;

stats::Observations sample(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> z;
    stats::Observations x(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        x(i, 0) = z(gen);
        x(i, 1) = z(gen);
    }
    return x;
}

void BM_Permanova21x10(benchmark::State &state) {
    const auto x = sample(210, 1);
    std::vector<std::size_t> codes(210);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        codes[i] = i / 10;
    }
    const stats::PermutationOptions opts{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        Rng rng(0);
        benchmark::DoNotOptimize(stats::permanova(x, codes, rng, opts).p);
    }
}
BENCHMARK(BM_Permanova21x10)->Arg(999)->Arg(9999)->Unit(benchmark::kMillisecond);

void BM_BootstrapEllipse(benchmark::State &state) {
    const auto x = sample(10, 2);
    for (auto _ : state) {
        Rng rng(0);
        benchmark::DoNotOptimize(stats::bootstrap_ellipse(x, rng).d95_sq);
    }
}
BENCHMARK(BM_BootstrapEllipse)->Unit(benchmark::kMillisecond);

void BM_TiedRankGroups(benchmark::State &state) {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> z;
    Eigen::MatrixXd v(21, 6);
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            v(i, j) = z(gen) + 0.4 * static_cast<double>(j);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(stats::tied_rank_groups(v).place);
    }
}
BENCHMARK(BM_TiedRankGroups);

}  // namespace

BENCHMARK_MAIN();
