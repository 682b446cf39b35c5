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

#include <span>
#include <vector>

namespace vqn::stats {

/// Holm step-down adjustment, input order preserved.
std::vector<double> p_adjust_holm(std::span<const double> p);
/// Benjamini-Hochberg step-up adjustment, input order preserved.
std::vector<double> p_adjust_bh(std::span<const double> p);

}  // namespace vqn::stats
