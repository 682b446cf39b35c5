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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vqn::bench {

struct RunRecord {
    std::string family;
    std::string optimizer;
    std::uint64_t seed = 0;
    double e_ground = 0.0;
    double e_excited = 0.0;
    double e_sa = 0.0;
    std::size_t n_evals = 0;
    bool converged = false;
    double wall_time_ms = 0.0;
    /// Not persisted; set when a run aborted.
    std::string diagnostic;

    bool finite() const noexcept;
};

inline constexpr std::string_view kRunsHeader =
    "family,optimizer,seed,e_ground,e_excited,e_sa,n_evals,converged,wall_time_ms";

/// %.17g, so a write/read round trip is exact.
std::string format_double(double v);
std::string format_record(const RunRecord &r);

void write_runs(std::ostream &out, std::span<const RunRecord> records);
/// Throws DataError with the offending line number on malformed input.
std::vector<RunRecord> read_runs(std::istream &in);
std::vector<RunRecord> read_runs_file(const std::filesystem::path &path);

}  // namespace vqn::bench
