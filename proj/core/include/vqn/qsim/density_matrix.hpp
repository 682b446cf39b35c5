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
#include <span>

#include "vqn/qsim/operators.hpp"

namespace vqn::qsim {

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;

/// Mixed state of a few-qubit register, stored as a dense matrix.
class DensityMatrix {
  public:
    /// Validating constructor: Hermitian and unit trace within 1e-10,
    /// eigenvalues >= -1e-9. Throws UsageError otherwise.
    explicit DensityMatrix(Matrix rho);

    static DensityMatrix basis_state(std::size_t n_qubits, std::size_t index);
    /// |psi><psi| for a normalized state vector.
    static DensityMatrix pure(const Vector &psi);
    static DensityMatrix maximally_mixed(std::size_t n_qubits);

    /// Skips validation; for results of maps already known to be CPTP.
    static DensityMatrix unchecked(Matrix rho);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
    const Matrix &matrix() const noexcept { return rho_; }
    Complex operator()(std::size_t row, std::size_t col) const { return rho_(row, col); }

    double trace() const { return rho_.trace().real(); }
    double purity() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

    /// Reduced state on `keep` (in the listed order).
    Matrix reduced(std::span<const std::size_t> keep) const;

  private:
    struct NoCheck {};
    DensityMatrix(Matrix rho, NoCheck);

    Matrix rho_;
    std::size_t n_qubits_ = 0;
};

}  // namespace vqn::qsim
