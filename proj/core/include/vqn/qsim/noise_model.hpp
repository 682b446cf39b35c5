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

#include <set>
#include <variant>
#include <vector>

#include "vqn/qsim/circuit.hpp"
#include "vqn/qsim/kraus.hpp"

namespace vqn::qsim {

struct PhaseDamping {
    double lambda = 0.0;
};
struct Depolarizing {
    double p = 0.0;
};
struct ThermalRelaxation {
    double t1_ns = 0.0;
    double t2_ns = 0.0;
};

using ChannelSpec = std::variant<PhaseDamping, Depolarizing, ThermalRelaxation>;

struct NoiseRule {
    std::set<GateKind> gates;
    ChannelSpec channel;
};

/// One channel to apply on the given qubits.
struct ChannelApplication {
    KrausChannel channel;
    std::vector<std::size_t> qubits;
};

/// Per-gate noise attachment: after each gate whose kind matches a rule,
/// that rule's channel acts on exactly the gate's qubits.
///
/// Phase damping and thermal relaxation act qubit-by-qubit (thermal uses the
/// gate's duration). Depolarizing acts jointly on the gate's qubits, so it
/// only attaches to one- and two-qubit gates.
class NoiseModel {
  public:
    NoiseModel() = default;
    /// Validates parameters: lambda, p in [0,1]; T1, T2 > 0; T2 <= 2 T1.
    explicit NoiseModel(std::vector<NoiseRule> rules);

    const std::vector<NoiseRule> &rules() const noexcept { return rules_; }
    bool empty() const noexcept { return rules_.empty(); }

    std::vector<ChannelApplication> channels_after(const Gate &gate) const;

  private:
    std::vector<NoiseRule> rules_;
};

}  // namespace vqn::qsim
