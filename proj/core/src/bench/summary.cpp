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

#include "vqn/bench/summary.hpp"

#include <algorithm>

#include "vqn/stats/descriptive.hpp"

namespace vqn::bench {

std::vector<CellSummary> summarize(std::span<const RunRecord> records) {
    std::vector<std::pair<std::string, std::string>> keys;
    std::vector<std::vector<double>> finals, evals;
    for (const auto &r : records) {
        if (!r.finite()) {
            continue;
        }
        const std::pair<std::string, std::string> key{r.family, r.optimizer};
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            finals.emplace_back();
            evals.emplace_back();
            it = keys.end() - 1;
        }
        const auto idx = static_cast<std::size_t>(it - keys.begin());
        finals[idx].push_back(r.e_sa);
        evals[idx].push_back(static_cast<double>(r.n_evals));
    }
    std::vector<CellSummary> out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        CellSummary c;
        c.family = keys[i].first;
        c.optimizer = keys[i].second;
        c.n = finals[i].size();
        c.mu_final = stats::mean(finals[i]);
        c.sigma_final = stats::sd(finals[i]);
        c.mu_evals = stats::mean(evals[i]);
        c.sigma_evals = stats::sd(evals[i]);
        if (c.n == 1) {
            c.flags.push_back("single_record");
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace vqn::bench
