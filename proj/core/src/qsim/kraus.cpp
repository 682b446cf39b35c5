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

#include "vqn/qsim/kraus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "vqn/errors.hpp"

namespace vqn::qsim {
namespace {

void require_probability(double v, const char *name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ParameterDomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

Matrix diag2(Complex a, Complex b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> operators) : ops_(std::move(operators)) {
    if (ops_.empty()) {
        throw InvalidChannelError("channel needs at least one Kraus operator");
    }
    const Eigen::Index d = ops_.front().rows();
    if (d < 2 || (d & (d - 1)) != 0) {
        throw InvalidChannelError("Kraus operator size must be a power of two >= 2");
    }
    for (const auto &op : ops_) {
        if (op.rows() != d || op.cols() != d) {
            throw InvalidChannelError("Kraus operators must share one square shape");
        }
    }
    arity_ = static_cast<std::size_t>(std::countr_zero(static_cast<std::size_t>(d)));
    if (completeness_error() > kKrausTolerance) {
        throw InvalidChannelError("Kraus operators are not trace preserving");
    }
}

double KrausChannel::completeness_error() const {
    const Eigen::Index d = ops_.front().rows();
    Matrix sum = Matrix::Zero(d, d);
    for (const auto &op : ops_) {
        sum += op.adjoint() * op;
    }
    return (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

KrausChannel kraus_phase_damping(double lambda) {
    require_probability(lambda, "phase damping lambda");
    return KrausChannel({diag2(1.0, std::sqrt(1.0 - lambda)), diag2(0.0, std::sqrt(lambda))});
}

KrausChannel kraus_amplitude_damping(double gamma) {
    require_probability(gamma, "amplitude damping gamma");
    Matrix e1 = Matrix::Zero(2, 2);
    e1(0, 1) = std::sqrt(gamma);
    return KrausChannel({diag2(1.0, std::sqrt(1.0 - gamma)), e1});
}

KrausChannel kraus_depolarizing(double p, std::size_t arity) {
    require_probability(p, "depolarizing p");
    if (arity != 1 && arity != 2) {
        throw ParameterDomainError("depolarizing arity must be 1 or 2, got " + std::to_string(arity));
    }
    // (1/d^2) sum_P P rho P = Tr(rho) I/d, hence
    // (1-p) rho + p I/d = (1 - p + p/d^2) rho + (p/d^2) sum_{P != I} P rho P.
    const double d = static_cast<double>(std::size_t{1} << arity);
    const double d2 = d * d;
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::vector<Matrix> ops;
    ops.reserve(static_cast<std::size_t>(d2));
    const std::size_t n_strings = std::size_t{1} << (2 * arity);
    for (std::size_t code = 0; code < n_strings; ++code) {
        std::string pauli;
        for (std::size_t a = 0; a < arity; ++a) {
            pauli.push_back(kLetters[(code >> (2 * (arity - 1 - a))) & 3U]);
        }
        const double weight = code == 0 ? 1.0 - p + p / d2 : p / d2;
        if (weight > 0.0) {
            ops.push_back(std::sqrt(weight) * pauli_string_matrix(pauli));
        }
    }
    return KrausChannel(std::move(ops));
}

KrausChannel kraus_thermal_relaxation(double t_g, double t1, double t2) {
    if (!(t_g > 0.0) || !(t1 > 0.0) || !(t2 > 0.0)) {
        throw ParameterDomainError("thermal relaxation needs t_g, T1, T2 > 0");
    }
    if (t2 > 2.0 * t1) {
        throw InvalidChannelError("thermal relaxation requires T2 <= 2*T1 (T1=" + std::to_string(t1) +
                                  ", T2=" + std::to_string(t2) + ")");
    }
    // Amplitude damping toward |0> with gamma = 1 - exp(-t/T1), then pure
    // dephasing topping the coherence decay up to exp(-t/T2).
    const double gamma = -std::expm1(-t_g / t1);
    const double coherence_extra = std::exp(-t_g / t2 + t_g / (2.0 * t1));
    const double lambda_phi = std::max(0.0, 1.0 - coherence_extra * coherence_extra);

    const Matrix a0 = diag2(1.0, std::sqrt(1.0 - gamma));
    Matrix a1 = Matrix::Zero(2, 2);
    a1(0, 1) = std::sqrt(gamma);
    const Matrix p0 = diag2(1.0, std::sqrt(1.0 - lambda_phi));
    const Matrix p1 = diag2(0.0, std::sqrt(lambda_phi));

    std::vector<Matrix> ops;
    for (const Matrix *p : {&p0, &p1}) {
        for (const Matrix *a : {&a0, static_cast<const Matrix *>(&a1)}) {
            Matrix op = (*p) * (*a);
            if (op.norm() > 1e-300) {
                ops.push_back(std::move(op));
            }
        }
    }
    return KrausChannel(std::move(ops));
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &channel,
                            std::span<const std::size_t> qubits) {
    if (qubits.size() != channel.arity()) {
        throw UsageError("channel arity " + std::to_string(channel.arity()) + " does not match " +
                         std::to_string(qubits.size()) + " target qubits");
    }
    const Matrix &in = rho.matrix();
    Matrix out = Matrix::Zero(in.rows(), in.cols());
    for (const auto &op : channel.operators()) {
        const Matrix full = embed_operator(op, qubits, rho.n_qubits());
        out.noalias() += full * in * full.adjoint();
    }
    return DensityMatrix::unchecked(std::move(out));
}

}  // namespace vqn::qsim
