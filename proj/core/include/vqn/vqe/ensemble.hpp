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
#include <span>

#include "vqn/qsim/circuit.hpp"
#include "vqn/qsim/estimator.hpp"
#include "vqn/qsim/pauli_sum.hpp"
#include "vqn/random.hpp"

namespace vqn::vqe {

/// Everything needed to evaluate the state-averaged energy: Hamiltonian,
/// ansatz, the two orthogonal computational-basis inputs and the estimator.
/// Immutable once built.
class EnsembleContext {
  public:
    EnsembleContext(qsim::PauliSum hamiltonian, qsim::Circuit ansatz, std::size_t phi_a, std::size_t phi_b,
                    qsim::EstimatorSpec estimator = qsim::EstimatorSpec::exact());

    const qsim::PauliSum &hamiltonian() const noexcept { return hamiltonian_; }
    const qsim::Circuit &ansatz() const noexcept { return ansatz_; }
    std::size_t phi_a() const noexcept { return phi_a_; }
    std::size_t phi_b() const noexcept { return phi_b_; }
    const qsim::EstimatorSpec &estimator() const noexcept { return estimator_; }
    std::size_t n_params() const noexcept { return ansatz_.n_params(); }

    /// The same context measured with a different estimator.
    EnsembleContext with_estimator(qsim::EstimatorSpec estimator) const;

  private:
    qsim::PauliSum hamiltonian_;
    qsim::Circuit ansatz_;
    std::size_t phi_a_;
    std::size_t phi_b_;
    qsim::EstimatorSpec estimator_;
};

/// Two lowest eigenvalues of H and their sum.
struct ReferencePair {
    double e0 = 0.0;
    double e1 = 0.0;
    double e_sa = 0.0;
};

struct ResolvedEnergies {
    double e0 = 0.0;
    double e1 = 0.0;
};

/// <Psi_A(theta)|H|Psi_A(theta)> + <Psi_B(theta)|H|Psi_B(theta)>, each state
/// prepared from its basis input under the context's noise and measured with
/// its estimator.
double sa_cost(std::span<const double> theta, const EnsembleContext &ctx, Rng &rng);

/// Diagonalizes the 2x2 block of H on span{Psi_A, Psi_B}; eigenvalues in
/// ascending order. Measurements are exact; noise acts on state preparation.
ResolvedEnergies resolve_states(std::span<const double> theta, const EnsembleContext &ctx);

/// Same, for arbitrary orthonormal initial states.
ResolvedEnergies resolve_states(std::span<const double> theta, const qsim::Vector &phi_a,
                                const qsim::Vector &phi_b, const qsim::PauliSum &hamiltonian,
                                const qsim::Circuit &ansatz, const qsim::NoiseModel *noise = nullptr);

/// Dense diagonalization of H. Throws CapacityError above 8 qubits.
ReferencePair reference_energies(const qsim::PauliSum &hamiltonian);

/// sa_cost bound to a context and a private random stream, counting calls.
/// One instance per optimization session.
class EnsembleObjective {
  public:
    EnsembleObjective(const EnsembleContext &ctx, std::uint64_t seed) : ctx_(&ctx), rng_(seed) {}

    double operator()(std::span<const double> theta) {
        ++evaluations_;
        return sa_cost(theta, *ctx_, rng_);
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

  private:
    const EnsembleContext *ctx_;
    Rng rng_;
    std::size_t evaluations_ = 0;
};

}  // namespace vqn::vqe
