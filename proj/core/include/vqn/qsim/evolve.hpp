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

#include <span>

#include "vqn/qsim/circuit.hpp"
#include "vqn/qsim/density_matrix.hpp"
#include "vqn/qsim/noise_model.hpp"

namespace vqn::qsim {

/// Local unitary of one gate (2^k x 2^k over its own qubits).
Matrix gate_matrix(const Gate &gate, std::span<const double> theta);

/// Full-register unitary of a noiseless circuit.
Matrix circuit_unitary(const Circuit &circuit, std::span<const double> theta);

DensityMatrix evolve_circuit(const DensityMatrix &rho0, const Circuit &circuit,
                             std::span<const double> theta);

DensityMatrix evolve_circuit(const DensityMatrix &rho0, const Circuit &circuit,
                             std::span<const double> theta, const NoiseModel &noise);

}  // namespace vqn::qsim
