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

#include "vqn/qsim/estimator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "vqn/errors.hpp"

namespace vqn::qsim {
namespace {

void check_dims(const DensityMatrix &rho, const PauliSum &h) {
    if (rho.n_qubits() != h.n_qubits()) {
        throw UsageError("state has " + std::to_string(rho.n_qubits()) + " qubits, Hamiltonian has " +
                         std::to_string(h.n_qubits()));
    }
}

// Single-qubit rotation V with V^dagger Z V = letter.
Matrix measurement_basis_change(char letter) {
    Matrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    h /= std::sqrt(2.0);
    switch (letter) {
        case 'X':
            return h;
        case 'Y': {
            Matrix s_dag = Matrix::Zero(2, 2);
            s_dag(0, 0) = 1.0;
            s_dag(1, 1) = Complex(0.0, -1.0);
            return h * s_dag;
        }
        default:
            return Matrix::Identity(2, 2);
    }
}

}  // namespace

void EstimatorSpec::validate() const {
    if (shots && *shots == 0) {
        throw ParameterDomainError("shot count n_m must be >= 1");
    }
}

double expectation_exact(const DensityMatrix &rho, const PauliSum &hamiltonian) {
    check_dims(rho, hamiltonian);
    Complex acc(0.0, 0.0);
    for (const auto &t : hamiltonian.terms()) {
        acc += t.coefficient * pauli_trace(rho.matrix(), t.pauli);
    }
    return acc.real();
}

double plus_outcome_probability(const DensityMatrix &rho, std::string_view pauli) {
    const std::size_t n = rho.n_qubits();
    if (pauli.size() != n) {
        throw UsageError("Pauli string length does not match state");
    }
    Matrix v = measurement_basis_change(pauli.front());
    for (std::size_t q = 1; q < n; ++q) {
        v = kron(v, measurement_basis_change(pauli[q]));
    }
    const Matrix rotated = v * rho.matrix() * v.adjoint();
    std::size_t support = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (pauli[q] != 'I') {
            support |= std::size_t{1} << qubit_bit(n, q);
        }
    }
    double plus = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        if ((std::popcount(i & support) & 1) == 0) {
            plus += rotated(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
        }
    }
    return std::clamp(plus, 0.0, 1.0);
}

double expectation_shots(const DensityMatrix &rho, const PauliSum &hamiltonian, std::size_t n_m, Rng &rng) {
    check_dims(rho, hamiltonian);
    if (n_m == 0) {
        throw ParameterDomainError("shot count n_m must be >= 1");
    }
    double total = 0.0;
    for (const auto &t : hamiltonian.terms()) {
        if (t.is_identity()) {
            total += t.coefficient;
            continue;
        }
        // The number of +1 outcomes among n_m independent draws from the
        // rotated diagonal is Binomial(n_m, P(+1)).
        const double p_plus = plus_outcome_probability(rho, t.pauli);
        std::binomial_distribution<long long> draw(static_cast<long long>(n_m), p_plus);
        const auto plus = static_cast<double>(draw(rng));
        const double mean = (2.0 * plus - static_cast<double>(n_m)) / static_cast<double>(n_m);
        total += t.coefficient * mean;
    }
    return total;
}

double estimate_energy(const DensityMatrix &rho, const PauliSum &hamiltonian, const EstimatorSpec &spec,
                       Rng &rng) {
    return spec.shots ? expectation_shots(rho, hamiltonian, *spec.shots, rng) : expectation_exact(rho, hamiltonian);
}

}  // namespace vqn::qsim
