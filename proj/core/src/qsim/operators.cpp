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

#include "vqn/qsim/operators.hpp"

#include <string>
#include <vector>

#include "vqn/errors.hpp"

namespace vqn::qsim {

Matrix pauli_matrix(char letter) {
    Matrix m = Matrix::Zero(2, 2);
    switch (letter) {
        case 'I':
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 'X':
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 'Y':
            m(0, 1) = Complex(0.0, -1.0);
            m(1, 0) = Complex(0.0, 1.0);
            break;
        case 'Z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw UsageError(std::string("invalid Pauli letter '") + letter + "'");
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix pauli_string_matrix(std::string_view pauli) {
    if (pauli.empty()) {
        throw UsageError("empty Pauli string");
    }
    Matrix out = pauli_matrix(pauli.front());
    for (std::size_t k = 1; k < pauli.size(); ++k) {
        out = kron(out, pauli_matrix(pauli[k]));
    }
    return out;
}

void check_qubits(std::span<const std::size_t> qubits, std::size_t n_qubits) {
    for (std::size_t a = 0; a < qubits.size(); ++a) {
        if (qubits[a] >= n_qubits) {
            throw UsageError("qubit index " + std::to_string(qubits[a]) + " out of range for " +
                             std::to_string(n_qubits) + " qubits");
        }
        for (std::size_t b = a + 1; b < qubits.size(); ++b) {
            if (qubits[a] == qubits[b]) {
                throw UsageError("repeated qubit index " + std::to_string(qubits[a]));
            }
        }
    }
}

Matrix embed_operator(const Matrix &local, std::span<const std::size_t> qubits, std::size_t n_qubits) {
    check_qubits(qubits, n_qubits);
    const std::size_t k = qubits.size();
    if (local.rows() != local.cols() || static_cast<std::size_t>(local.rows()) != (std::size_t{1} << k)) {
        throw UsageError("local operator size does not match its qubit count");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::size_t target_mask = 0;
    std::vector<std::size_t> bit(k);
    for (std::size_t a = 0; a < k; ++a) {
        bit[a] = qubit_bit(n_qubits, qubits[a]);
        target_mask |= std::size_t{1} << bit[a];
    }
    auto local_index = [&](std::size_t global) {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < k; ++a) {
            idx = (idx << 1) | ((global >> bit[a]) & 1U);
        }
        return idx;
    };
    auto scatter = [&](std::size_t local_idx) {
        std::size_t g = 0;
        for (std::size_t a = 0; a < k; ++a) {
            if ((local_idx >> (k - 1 - a)) & 1U) {
                g |= std::size_t{1} << bit[a];
            }
        }
        return g;
    };

    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const std::size_t ldim = std::size_t{1} << k;
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t rest = col & ~target_mask;
        const std::size_t lc = local_index(col);
        for (std::size_t lr = 0; lr < ldim; ++lr) {
            const Complex v = local(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
            if (v != Complex(0.0, 0.0)) {
                full(static_cast<Eigen::Index>(rest | scatter(lr)), static_cast<Eigen::Index>(col)) = v;
            }
        }
    }
    return full;
}

}  // namespace vqn::qsim
