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

#include "vqn/vqe/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vqn/errors.hpp"
#include "vqn/qsim/evolve.hpp"

namespace vqn::vqe {
namespace {

using qsim::Complex;
using qsim::DensityMatrix;
using qsim::Matrix;
using qsim::Vector;

Vector basis_vector(std::size_t dim, std::size_t index) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

DensityMatrix prepare(const Vector &phi, const qsim::Circuit &ansatz, std::span<const double> theta,
                      const qsim::NoiseModel *noise) {
    const auto rho0 = DensityMatrix::pure(phi);
    return noise ? qsim::evolve_circuit(rho0, ansatz, theta, *noise) : qsim::evolve_circuit(rho0, ansatz, theta);
}

ResolvedEnergies diagonalize_2x2(double h_aa, double h_bb, Complex h_ab) {
    // Eigenvalues of [[a, c], [c*, b]]: (a+b)/2 -+ sqrt(((a-b)/2)^2 + |c|^2)
    const double mid = 0.5 * (h_aa + h_bb);
    const double half_gap = std::hypot(0.5 * (h_aa - h_bb), std::abs(h_ab));
    return {mid - half_gap, mid + half_gap};
}

}  // namespace

EnsembleContext::EnsembleContext(qsim::PauliSum hamiltonian, qsim::Circuit ansatz, std::size_t phi_a,
                                 std::size_t phi_b, qsim::EstimatorSpec estimator)
    : hamiltonian_(std::move(hamiltonian)),
      ansatz_(std::move(ansatz)),
      phi_a_(phi_a),
      phi_b_(phi_b),
      estimator_(std::move(estimator)) {
    if (hamiltonian_.n_qubits() != ansatz_.n_qubits()) {
        throw UsageError("Hamiltonian acts on " + std::to_string(hamiltonian_.n_qubits()) +
                         " qubits but the ansatz on " + std::to_string(ansatz_.n_qubits()));
    }
    if (phi_a_ == phi_b_) {
        throw UsageError("initial states must be orthogonal (phi_a != phi_b)");
    }
    if (phi_a_ >= hamiltonian_.dim() || phi_b_ >= hamiltonian_.dim()) {
        throw UsageError("initial basis index out of range");
    }
    estimator_.validate();
}

EnsembleContext EnsembleContext::with_estimator(qsim::EstimatorSpec estimator) const {
    return EnsembleContext(hamiltonian_, ansatz_, phi_a_, phi_b_, std::move(estimator));
}

double sa_cost(std::span<const double> theta, const EnsembleContext &ctx, Rng &rng) {
    if (theta.size() != ctx.n_params()) {
        throw UsageError("sa_cost expects " + std::to_string(ctx.n_params()) + " parameters, got " +
                         std::to_string(theta.size()));
    }
    const auto &spec = ctx.estimator();
    const qsim::NoiseModel *noise = spec.noise ? &*spec.noise : nullptr;
    const auto n = ctx.hamiltonian().n_qubits();
    double total = 0.0;
    for (std::size_t phi : {ctx.phi_a(), ctx.phi_b()}) {
        const auto rho0 = DensityMatrix::basis_state(n, phi);
        const auto rho = noise ? qsim::evolve_circuit(rho0, ctx.ansatz(), theta, *noise)
                               : qsim::evolve_circuit(rho0, ctx.ansatz(), theta);
        total += qsim::estimate_energy(rho, ctx.hamiltonian(), spec, rng);
    }
    return total;
}

ResolvedEnergies resolve_states(std::span<const double> theta, const EnsembleContext &ctx) {
    const auto dim = ctx.hamiltonian().dim();
    const auto &noise = ctx.estimator().noise;
    return resolve_states(theta, basis_vector(dim, ctx.phi_a()), basis_vector(dim, ctx.phi_b()), ctx.hamiltonian(),
                          ctx.ansatz(), noise ? &*noise : nullptr);
}

ResolvedEnergies resolve_states(std::span<const double> theta, const Vector &phi_a, const Vector &phi_b,
                                const qsim::PauliSum &hamiltonian, const qsim::Circuit &ansatz,
                                const qsim::NoiseModel *noise) {
    if (theta.size() != ansatz.n_params()) {
        throw UsageError("resolve_states: parameter length mismatch");
    }
    if (std::abs(phi_a.dot(phi_b)) > 1e-10) {
        throw UsageError("resolve_states: initial states are not orthogonal");
    }
    if (noise == nullptr || noise->empty()) {
        // Pure states: the block is <Psi_i|H|Psi_j> with Psi = U phi.
        const Matrix u = qsim::circuit_unitary(ansatz, theta);
        const Vector psi_a = u * phi_a;
        const Vector psi_b = u * phi_b;
        const Matrix h = hamiltonian.dense();
        const Vector h_b = h * psi_b;
        return diagonalize_2x2((psi_a.adjoint() * h * psi_a)(0, 0).real(), psi_b.dot(h_b).real(),
                               psi_a.dot(h_b));
    }
    // Mixed states: diagonal entries from the evolved inputs, the coherence
    // from four superposition inputs via the polarization identity.
    auto energy = [&](const Vector &phi) {
        return qsim::expectation_exact(prepare(phi, ansatz, theta, noise), hamiltonian);
    };
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex i_unit(0.0, 1.0);
    const double h_aa = energy(phi_a);
    const double h_bb = energy(phi_b);
    const double plus = energy(inv_sqrt2 * (phi_a + phi_b));
    const double minus = energy(inv_sqrt2 * (phi_a - phi_b));
    const double plus_i = energy(inv_sqrt2 * (phi_a + i_unit * phi_b));
    const double minus_i = energy(inv_sqrt2 * (phi_a - i_unit * phi_b));
    const Complex h_ab(0.5 * (plus - minus), 0.5 * (minus_i - plus_i));
    return diagonalize_2x2(h_aa, h_bb, h_ab);
}

ReferencePair reference_energies(const qsim::PauliSum &hamiltonian) {
    if (hamiltonian.n_qubits() > qsim::kMaxQubits) {
        throw CapacityError("reference energies limited to 8 qubits");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian.dense(), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    ReferencePair out;
    out.e0 = ev(0);
    out.e1 = ev(1);
    out.e_sa = out.e0 + out.e1;
    return out;
}

}  // namespace vqn::vqe
