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
#include <span>
#include <string>
#include <vector>

#include "vqn/bench/run_record.hpp"

namespace vqn::bench {

struct CellSummary {
    std::string family;
    std::string optimizer;
    std::size_t n = 0;
    double mu_final = 0.0;
    double sigma_final = 0.0;
    double mu_evals = 0.0;
    double sigma_evals = 0.0;
    /// "single_record" when sigma is undefined and reported as 0.
    std::vector<std::string> flags;
};

/// Mean and sample standard deviation of e_sa and n_evals per cell, in
/// order of first appearance. Non-finite records are skipped.
std::vector<CellSummary> summarize(std::span<const RunRecord> records);

}  // namespace vqn::bench
