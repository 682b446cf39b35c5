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

#include "vqn/qsim/noise_model.hpp"

#include <string>

#include "vqn/errors.hpp"

namespace vqn::qsim {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const ChannelSpec &spec) {
    std::visit(Overloaded{
                   [](const PhaseDamping &pd) {
                       if (!(pd.lambda >= 0.0 && pd.lambda <= 1.0)) {
                           throw ParameterDomainError("phase damping lambda outside [0, 1]");
                       }
                   },
                   [](const Depolarizing &dp) {
                       if (!(dp.p >= 0.0 && dp.p <= 1.0)) {
                           throw ParameterDomainError("depolarizing p outside [0, 1]");
                       }
                   },
                   [](const ThermalRelaxation &tr) {
                       if (!(tr.t1_ns > 0.0) || !(tr.t2_ns > 0.0)) {
                           throw ParameterDomainError("thermal relaxation needs T1, T2 > 0");
                       }
                       if (tr.t2_ns > 2.0 * tr.t1_ns) {
                           throw InvalidChannelError("thermal relaxation requires T2 <= 2*T1");
                       }
                   },
               },
               spec);
}

}  // namespace

NoiseModel::NoiseModel(std::vector<NoiseRule> rules) : rules_(std::move(rules)) {
    for (const auto &r : rules_) {
        validate(r.channel);
    }
}

std::vector<ChannelApplication> NoiseModel::channels_after(const Gate &gate) const {
    std::vector<ChannelApplication> out;
    for (const auto &rule : rules_) {
        if (!rule.gates.contains(gate.kind)) {
            continue;
        }
        std::visit(Overloaded{
                       [&](const PhaseDamping &pd) {
                           const auto ch = kraus_phase_damping(pd.lambda);
                           for (std::size_t q : gate.qubits) {
                               out.push_back({ch, {q}});
                           }
                       },
                       [&](const Depolarizing &dp) {
                           if (gate.qubits.size() > 2) {
                               throw UsageError("depolarizing rule matched a " +
                                                std::to_string(gate.qubits.size()) +
                                                "-qubit gate; only 1- and 2-qubit gates are supported");
                           }
                           out.push_back({kraus_depolarizing(dp.p, gate.qubits.size()), gate.qubits});
                       },
                       [&](const ThermalRelaxation &tr) {
                           const auto ch = kraus_thermal_relaxation(gate.duration_ns, tr.t1_ns, tr.t2_ns);
                           for (std::size_t q : gate.qubits) {
                               out.push_back({ch, {q}});
                           }
                       },
                   },
                   rule.channel);
    }
    return out;
}

}  // namespace vqn::qsim
