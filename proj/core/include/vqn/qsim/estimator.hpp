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
#include <optional>

#include "vqn/qsim/density_matrix.hpp"
#include "vqn/qsim/noise_model.hpp"
#include "vqn/qsim/pauli_sum.hpp"
#include "vqn/random.hpp"

namespace vqn::qsim {

/// How an energy is measured: exactly, or from n_m shots per Pauli term,
/// optionally on top of a noise model attached to state preparation.
struct EstimatorSpec {
    std::optional<std::size_t> shots;
    std::optional<NoiseModel> noise;

    static EstimatorSpec exact() { return {}; }
    static EstimatorSpec with_shots(std::size_t n_m) { return {n_m, std::nullopt}; }

    bool is_exact() const noexcept { return !shots.has_value(); }
    /// Throws ParameterDomainError for shots == 0.
    void validate() const;
};

/// Tr(rho H). Throws UsageError when dimensions disagree.
double expectation_exact(const DensityMatrix &rho, const PauliSum &hamiltonian);

/// Shot-based estimate: each non-identity term is measured in its eigenbasis
/// with n_m samples; identity terms contribute their coefficient exactly.
double expectation_shots(const DensityMatrix &rho, const PauliSum &hamiltonian, std::size_t n_m,
                         Rng &rng);

/// Probability of the +1 outcome when measuring `pauli` on rho, obtained by
/// rotating into the Pauli eigenbasis and summing even-parity populations.
double plus_outcome_probability(const DensityMatrix &rho, std::string_view pauli);

/// Dispatches on spec.shots.
double estimate_energy(const DensityMatrix &rho, const PauliSum &hamiltonian,
                       const EstimatorSpec &spec, Rng &rng);

}  // namespace vqn::qsim
