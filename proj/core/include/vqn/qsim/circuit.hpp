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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vqn::qsim {

enum class GateKind { x, y, z, h, rx, ry, rz, cx, prot };

std::string_view gate_kind_name(GateKind kind) noexcept;
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;
bool is_parametrized(GateKind kind) noexcept;

inline constexpr std::size_t kMaxCircuitQubits = 8;
inline constexpr double kSingleQubitDurationNs = 50.0;
inline constexpr double kMultiQubitDurationNs = 150.0;

struct Gate {
    GateKind kind = GateKind::x;
    std::vector<std::size_t> qubits;
    std::optional<std::size_t> param_index;
    std::string pauli;  // prot only
    double duration_ns = kSingleQubitDurationNs;

    /// Fills in the default duration for the gate's qubit count and checks
    /// the per-kind shape (arity, parameter presence, Pauli length).
    static Gate make(GateKind kind, std::vector<std::size_t> qubits,
                     std::optional<std::size_t> param_index = std::nullopt, std::string pauli = {});
};

/// Ordered gate list over a fixed register with a parameter vector of size
/// n_params, each parameter referenced by at least one gate.
class Circuit {
  public:
    Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::size_t n_params);

    /// Parses `<kind> <qubit...> [t<param_index>]` lines; prot lines carry
    /// the Pauli string right after the kind. n_params is inferred from the
    /// largest parameter index. When n_qubits is absent it is the largest
    /// referenced qubit plus one.
    static Circuit parse(std::string_view text, std::optional<std::size_t> n_qubits = std::nullopt);
    static Circuit load(const std::filesystem::path &path,
                        std::optional<std::size_t> n_qubits = std::nullopt);

    /// Empty circuit on n qubits.
    static Circuit identity(std::size_t n_qubits) { return Circuit(n_qubits, {}, 0); }

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t n_params() const noexcept { return n_params_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }

  private:
    std::size_t n_qubits_ = 0;
    std::size_t n_params_ = 0;
    std::vector<Gate> gates_;
};

}  // namespace vqn::qsim
