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

#include "vqn/qsim/evolve.hpp"

#include <cmath>
#include <string>

#include "vqn/errors.hpp"

namespace vqn::qsim {
namespace {

void check_theta(const Circuit &circuit, std::span<const double> theta) {
    if (theta.size() != circuit.n_params()) {
        throw UsageError("circuit expects " + std::to_string(circuit.n_params()) + " parameters, got " +
                         std::to_string(theta.size()));
    }
}

// exp(-i angle/2 P) = cos(angle/2) I - i sin(angle/2) P
Matrix pauli_rotation(std::string_view pauli, double angle) {
    const Matrix p = pauli_string_matrix(pauli);
    const auto d = p.rows();
    return std::cos(angle / 2.0) * Matrix::Identity(d, d) - Complex(0.0, std::sin(angle / 2.0)) * p;
}

Matrix evolve_gate(const Matrix &rho, const Gate &gate, std::span<const double> theta, std::size_t n_qubits) {
    const Matrix u = embed_operator(gate_matrix(gate, theta), gate.qubits, n_qubits);
    return u * rho * u.adjoint();
}

}  // namespace

Matrix gate_matrix(const Gate &gate, std::span<const double> theta) {
    auto angle = [&]() {
        if (!gate.param_index || *gate.param_index >= theta.size()) {
            throw UsageError("gate parameter index out of range");
        }
        return theta[*gate.param_index];
    };
    switch (gate.kind) {
        case GateKind::x:
            return pauli_matrix('X');
        case GateKind::y:
            return pauli_matrix('Y');
        case GateKind::z:
            return pauli_matrix('Z');
        case GateKind::h: {
            Matrix h(2, 2);
            h << 1.0, 1.0, 1.0, -1.0;
            return h / std::sqrt(2.0);
        }
        case GateKind::rx:
            return pauli_rotation("X", angle());
        case GateKind::ry:
            return pauli_rotation("Y", angle());
        case GateKind::rz:
            return pauli_rotation("Z", angle());
        case GateKind::cx: {
            Matrix cx = Matrix::Zero(4, 4);
            cx(0, 0) = 1.0;
            cx(1, 1) = 1.0;
            cx(2, 3) = 1.0;
            cx(3, 2) = 1.0;
            return cx;
        }
        case GateKind::prot:
            return pauli_rotation(gate.pauli, angle());
    }
    throw UsageError("unknown gate kind");
}

Matrix circuit_unitary(const Circuit &circuit, std::span<const double> theta) {
    check_theta(circuit, theta);
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << circuit.n_qubits());
    Matrix u = Matrix::Identity(d, d);
    for (const auto &g : circuit.gates()) {
        u = embed_operator(gate_matrix(g, theta), g.qubits, circuit.n_qubits()) * u;
    }
    return u;
}

DensityMatrix evolve_circuit(const DensityMatrix &rho0, const Circuit &circuit, std::span<const double> theta) {
    return evolve_circuit(rho0, circuit, theta, NoiseModel{});
}

DensityMatrix evolve_circuit(const DensityMatrix &rho0, const Circuit &circuit, std::span<const double> theta,
                             const NoiseModel &noise) {
    check_theta(circuit, theta);
    if (rho0.n_qubits() != circuit.n_qubits()) {
        throw UsageError("state has " + std::to_string(rho0.n_qubits()) + " qubits, circuit has " +
                         std::to_string(circuit.n_qubits()));
    }
    DensityMatrix rho = rho0;
    for (const auto &g : circuit.gates()) {
        rho = DensityMatrix::unchecked(evolve_gate(rho.matrix(), g, theta, circuit.n_qubits()));
        if (noise.empty()) {
            continue;
        }
        for (const auto &app : noise.channels_after(g)) {
            rho = apply_channel(rho, app.channel, app.qubits);
        }
    }
    return rho;
}

}  // namespace vqn::qsim
