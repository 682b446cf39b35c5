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

#include "vqn/stats/p_adjust.hpp"

#include <algorithm>
#include <numeric>

#include "vqn/errors.hpp"

namespace vqn::stats {
namespace {

std::vector<std::size_t> ascending(std::span<const double> p) {
    for (double v : p) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ParameterDomainError("p-values must lie in [0, 1]");
        }
    }
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
    return order;
}

}  // namespace

std::vector<double> p_adjust_holm(std::span<const double> p) {
    const auto order = ascending(p);
    const std::size_t m = p.size();
    std::vector<double> out(m);
    double running = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double v = std::min(1.0, static_cast<double>(m - i) * p[order[i]]);
        running = std::max(running, v);
        out[order[i]] = running;
    }
    return out;
}

std::vector<double> p_adjust_bh(std::span<const double> p) {
    const auto order = ascending(p);
    const std::size_t m = p.size();
    std::vector<double> out(m);
    double running = 1.0;
    for (std::size_t i = m; i-- > 0;) {
        const double v = std::min(1.0, static_cast<double>(m) / static_cast<double>(i + 1) * p[order[i]]);
        running = std::min(running, v);
        out[order[i]] = running;
    }
    return out;
}

}  // namespace vqn::stats
