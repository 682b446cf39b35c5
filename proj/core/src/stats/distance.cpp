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

#include "vqn/stats/distance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vqn/stats/descriptive.hpp"

namespace vqn::stats {

DistanceReport distance_metrics(const std::vector<DistancePoint> &points, const Eigen::Vector2d &reference) {
    DistanceReport out;
    std::vector<std::string> optimizers, families;
    for (const auto &pt : points) {
        if (std::find(optimizers.begin(), optimizers.end(), pt.optimizer) == optimizers.end()) {
            optimizers.push_back(pt.optimizer);
        }
        if (std::find(families.begin(), families.end(), pt.family) == families.end()) {
            families.push_back(pt.family);
        }
    }

    // cell index = o * families + f
    std::vector<CellDistance> grid(optimizers.size() * families.size());
    std::vector<double> sq_sum(grid.size(), 0.0);
    for (std::size_t o = 0; o < optimizers.size(); ++o) {
        for (std::size_t f = 0; f < families.size(); ++f) {
            grid[o * families.size() + f].optimizer = optimizers[o];
            grid[o * families.size() + f].family = families[f];
        }
    }
    for (const auto &pt : points) {
        const auto o = static_cast<std::size_t>(std::find(optimizers.begin(), optimizers.end(), pt.optimizer) -
                                                optimizers.begin());
        const auto f =
            static_cast<std::size_t>(std::find(families.begin(), families.end(), pt.family) - families.begin());
        auto &cell = grid[o * families.size() + f];
        ++cell.n;
        cell.centroid += pt.energies;
        sq_sum[o * families.size() + f] += (pt.energies - reference).squaredNorm();
    }
    for (std::size_t c = 0; c < grid.size(); ++c) {
        auto &cell = grid[c];
        if (cell.n == 0) {
            out.diagnostics.push_back("empty cell: " + cell.optimizer + " / " + cell.family);
            continue;
        }
        cell.centroid /= static_cast<double>(cell.n);
        cell.centroid_distance = (cell.centroid - reference).norm();
        cell.rms = std::sqrt(sq_sum[c] / static_cast<double>(cell.n));
        out.cells.push_back(cell);
    }

    std::vector<std::vector<double>> places(optimizers.size());
    std::vector<std::size_t> wins(optimizers.size(), 0);
    for (std::size_t f = 0; f < families.size(); ++f) {
        std::vector<double> dist;
        for (std::size_t o = 0; o < optimizers.size(); ++o) {
            const auto &cell = grid[o * families.size() + f];
            if (cell.n == 0) {
                break;
            }
            dist.push_back(cell.centroid_distance);
        }
        if (dist.size() != optimizers.size()) {
            out.diagnostics.push_back("family not ranked (missing optimizer cells): " + families[f]);
            continue;
        }
        const auto ranks = average_ranks(dist);
        const double best = *std::min_element(dist.begin(), dist.end());
        for (std::size_t o = 0; o < optimizers.size(); ++o) {
            places[o].push_back(ranks[o]);
            wins[o] += dist[o] == best ? 1 : 0;
        }
    }

    for (std::size_t o = 0; o < optimizers.size(); ++o) {
        OptimizerDistance s;
        s.optimizer = optimizers[o];
        double dsum = 0.0, sq = 0.0;
        std::size_t cells = 0, n = 0;
        for (std::size_t f = 0; f < families.size(); ++f) {
            const std::size_t c = o * families.size() + f;
            if (grid[c].n == 0) {
                continue;
            }
            dsum += grid[c].centroid_distance;
            ++cells;
            sq += sq_sum[c];
            n += grid[c].n;
        }
        s.mean_centroid_distance = cells ? dsum / static_cast<double>(cells) : 0.0;
        s.rms = n ? std::sqrt(sq / static_cast<double>(n)) : 0.0;
        if (!places[o].empty()) {
            s.mean_place = mean(places[o]);
            s.sd_place = sd(places[o]);
        }
        s.wins = wins[o];
        out.optimizers.push_back(s);
    }
    return out;
}

}  // namespace vqn::stats
