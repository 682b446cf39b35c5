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
#include <vector>

#include "vqn/qsim/density_matrix.hpp"
#include "vqn/qsim/operators.hpp"

namespace vqn::qsim {

/// Completeness tolerance for sum_i E_i^dagger E_i = I.
inline constexpr double kKrausTolerance = 1e-10;

/// A CPTP map given by its Kraus operators.
class KrausChannel {
  public:
    /// Throws InvalidChannelError when the operators are not square, not of
    /// power-of-two size, or do not resolve the identity.
    explicit KrausChannel(std::vector<Matrix> operators);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t dim() const noexcept { return std::size_t{1} << arity_; }
    const std::vector<Matrix> &operators() const noexcept { return ops_; }

    /// max |(sum E^dagger E - I)_ij|
    double completeness_error() const;

  private:
    std::vector<Matrix> ops_;
    std::size_t arity_ = 0;
};

KrausChannel kraus_phase_damping(double lambda);
KrausChannel kraus_amplitude_damping(double gamma);

/// (1-p) rho + p Tr(rho) I/d as a Pauli-twirl Kraus set, arity 1 or 2.
KrausChannel kraus_depolarizing(double p, std::size_t arity);

/// Single-qubit T1/T2 relaxation toward |0> over a gate of duration t_g.
/// Populations of |1> decay as exp(-t_g/T1), coherences as exp(-t_g/T2).
/// All durations in nanoseconds; requires T2 <= 2 T1.
KrausChannel kraus_thermal_relaxation(double t_g, double t1, double t2);

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &channel,
                            std::span<const std::size_t> qubits);

}  // namespace vqn::qsim
