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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace vqn::qsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest register handled by the dense routines.
inline constexpr std::size_t kMaxQubits = 8;

// Qubit q of an n-qubit register is bit (n - 1 - q) of a basis-state index,
// so the first character of a Pauli string and the leftmost ket label both
// refer to qubit 0.
constexpr std::size_t qubit_bit(std::size_t n_qubits, std::size_t qubit) noexcept {
    return n_qubits - 1 - qubit;
}

/// 2x2 matrix of a single Pauli letter (I, X, Y or Z).
Matrix pauli_matrix(char letter);

/// Dense matrix of a Pauli string, first letter = most significant factor.
Matrix pauli_string_matrix(std::string_view pauli);

Matrix kron(const Matrix &a, const Matrix &b);

/// Lifts an operator on `qubits` (first listed qubit = most significant local
/// bit) to the full 2^n_qubits space, acting as identity elsewhere.
Matrix embed_operator(const Matrix &local, std::span<const std::size_t> qubits, std::size_t n_qubits);

/// Throws UsageError unless the indices are distinct and < n_qubits.
void check_qubits(std::span<const std::size_t> qubits, std::size_t n_qubits);

}  // namespace vqn::qsim
