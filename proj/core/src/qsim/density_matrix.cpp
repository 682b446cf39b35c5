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

#include "vqn/qsim/density_matrix.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "vqn/errors.hpp"

namespace vqn::qsim {
namespace {

std::size_t qubits_for_dim(Eigen::Index dim) {
    if (dim <= 1 || (static_cast<std::size_t>(dim) & (static_cast<std::size_t>(dim) - 1)) != 0) {
        throw UsageError("density matrix dimension must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(static_cast<std::size_t>(dim)));
    if (n > kMaxQubits) {
        throw CapacityError("density matrices limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    return n;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix rho, NoCheck) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols()) {
        throw UsageError("density matrix must be square");
    }
    n_qubits_ = qubits_for_dim(rho_.rows());
}

DensityMatrix::DensityMatrix(Matrix rho) : DensityMatrix(std::move(rho), NoCheck{}) {
    if (hermiticity_error() > kStateTolerance) {
        throw UsageError("density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > kStateTolerance) {
        throw UsageError("density matrix trace differs from 1");
    }
    if (min_eigenvalue() < -kPsdTolerance) {
        throw UsageError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::unchecked(Matrix rho) { return DensityMatrix(std::move(rho), NoCheck{}); }

DensityMatrix DensityMatrix::basis_state(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw CapacityError("basis_state: unsupported qubit count " + std::to_string(n_qubits));
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw UsageError("basis index " + std::to_string(index) + " out of range");
    }
    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    rho(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return unchecked(std::move(rho));
}

DensityMatrix DensityMatrix::pure(const Vector &psi) {
    if (std::abs(psi.squaredNorm() - 1.0) > kStateTolerance) {
        throw UsageError("state vector is not normalized");
    }
    return unchecked(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    return unchecked(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

double DensityMatrix::hermiticity_error() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
    const Matrix herm = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Matrix DensityMatrix::reduced(std::span<const std::size_t> keep) const {
    check_qubits(keep, n_qubits_);
    const std::size_t k = keep.size();
    const auto kdim = static_cast<Eigen::Index>(std::size_t{1} << k);
    std::vector<std::size_t> bit(k);
    std::size_t keep_mask = 0;
    for (std::size_t a = 0; a < k; ++a) {
        bit[a] = qubit_bit(n_qubits_, keep[a]);
        keep_mask |= std::size_t{1} << bit[a];
    }
    auto local = [&](std::size_t g) {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < k; ++a) {
            idx = (idx << 1) | ((g >> bit[a]) & 1U);
        }
        return static_cast<Eigen::Index>(idx);
    };
    Matrix out = Matrix::Zero(kdim, kdim);
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if ((r & ~keep_mask) == (c & ~keep_mask)) {
                out(local(r), local(c)) += rho_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return out;
}

}  // namespace vqn::qsim
