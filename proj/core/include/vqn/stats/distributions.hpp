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

namespace vqn::stats {

/// Upper-tail probabilities; +inf statistics give 0.
double chi2_sf(double x, double df);
double f_sf(double x, double df1, double df2);
double normal_sf(double z);
double normal_two_sided(double z);

}  // namespace vqn::stats
