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

#include "vqn/stats/types.hpp"

#include <algorithm>
#include <unordered_map>

namespace vqn::stats {

bool TestResult::flagged(const std::string &flag) const {
    return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

GroupCodes encode_groups(std::span<const std::string> labels) {
    GroupCodes out;
    std::unordered_map<std::string, std::size_t> index;
    out.codes.reserve(labels.size());
    for (const auto &label : labels) {
        auto [it, fresh] = index.try_emplace(label, out.names.size());
        if (fresh) {
            out.names.push_back(label);
            out.sizes.push_back(0);
        }
        out.codes.push_back(it->second);
        ++out.sizes[it->second];
    }
    return out;
}

std::pair<Observations, GroupCodes> pool(std::span<const Sample2D> samples) {
    Eigen::Index rows = 0;
    for (const auto &s : samples) {
        rows += s.points.rows();
    }
    Observations x(rows, 2);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(rows));
    Eigen::Index r = 0;
    for (const auto &s : samples) {
        x.middleRows(r, s.points.rows()) = s.points;
        r += s.points.rows();
        labels.insert(labels.end(), static_cast<std::size_t>(s.points.rows()), s.family);
    }
    return {std::move(x), encode_groups(labels)};
}

}  // namespace vqn::stats
