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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vqn/qsim/operators.hpp"

namespace vqn::qsim {

struct PauliTerm {
    double coefficient = 0.0;
    std::string pauli;

    bool is_identity() const noexcept { return pauli.find_first_not_of('I') == std::string::npos; }
};

/// Hamiltonian as a real-weighted sum of Pauli strings.
///
/// All strings share one length (the register size). Terms with the same
/// string are merged on construction, keeping first-occurrence order.
class PauliSum {
  public:
    explicit PauliSum(std::vector<PauliTerm> terms);

    /// Parses `<coefficient> <pauli_string>` lines; '#' starts a comment.
    static PauliSum parse(std::string_view text);
    static PauliSum load(const std::filesystem::path &path);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }
    const std::vector<PauliTerm> &terms() const noexcept { return terms_; }

    PauliSum scaled(double factor) const;

    /// Dense 2^n x 2^n matrix. Throws CapacityError above kMaxQubits.
    Matrix dense() const;

    /// Sum of coefficients of identity terms.
    double identity_offset() const;

  private:
    std::size_t n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Tr(rho P) for a single Pauli string, computed without forming P.
Complex pauli_trace(const Matrix &rho, std::string_view pauli);

}  // namespace vqn::qsim
