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

#include "vqn/random.hpp"
#include "vqn/stats/types.hpp"

namespace vqn::stats {

/// Label assignments are enumerated exhaustively when there are at most
/// n_perm + 1 distinct ones (the observed one included), else sampled.
/// In both cases p = (1 + #{F_perm >= F_obs}) / (1 + #permutations).
struct PermutationOptions {
    std::size_t n_perm = 10000;
};

/// Pseudo-F from squared Euclidean distances; extras: R2, ss_between,
/// ss_within, ss_total, n_perm, exhaustive.
TestResult permanova(const Observations &x, std::span<const std::size_t> codes, Rng &rng,
                     PermutationOptions opts = {});

/// ANOVA F on distances to group centroids; extras: n_perm, exhaustive.
TestResult permdisp(const Observations &x, std::span<const std::size_t> codes, Rng &rng,
                    PermutationOptions opts = {});

enum class PairwiseTest { permanova, permdisp };
enum class Adjust { none, holm, bh };

PairwiseMatrix pairwise_posthoc(const Observations &x, const GroupCodes &groups, PairwiseTest test, Adjust adjust,
                                Rng &rng, PermutationOptions opts = {});

}  // namespace vqn::stats
