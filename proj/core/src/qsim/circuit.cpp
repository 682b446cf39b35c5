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

#include "vqn/qsim/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "vqn/errors.hpp"

namespace vqn::qsim {
namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 9> kGateNames{{
    {GateKind::x, "x"},
    {GateKind::y, "y"},
    {GateKind::z, "z"},
    {GateKind::h, "h"},
    {GateKind::rx, "rx"},
    {GateKind::ry, "ry"},
    {GateKind::rz, "rz"},
    {GateKind::cx, "cx"},
    {GateKind::prot, "prot"},
}};

std::optional<std::size_t> parse_index(std::string_view tok) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) noexcept {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_parametrized(GateKind kind) noexcept {
    return kind == GateKind::rx || kind == GateKind::ry || kind == GateKind::rz || kind == GateKind::prot;
}

Gate Gate::make(GateKind kind, std::vector<std::size_t> qubits, std::optional<std::size_t> param_index,
                std::string pauli) {
    const std::string name(gate_kind_name(kind));
    std::size_t expected_qubits = 1;
    if (kind == GateKind::cx) {
        expected_qubits = 2;
    } else if (kind == GateKind::prot) {
        if (pauli.empty() || pauli.find_first_not_of("IXYZ") != std::string::npos) {
            throw UsageError("prot needs a Pauli string over {I,X,Y,Z}");
        }
        expected_qubits = pauli.size();
    }
    if (qubits.size() != expected_qubits) {
        throw UsageError(name + " acts on " + std::to_string(expected_qubits) + " qubit(s), got " +
                         std::to_string(qubits.size()));
    }
    if (is_parametrized(kind) != param_index.has_value()) {
        throw UsageError(is_parametrized(kind) ? name + " requires a parameter index"
                                               : name + " takes no parameter");
    }
    if (kind != GateKind::prot && !pauli.empty()) {
        throw UsageError("only prot gates carry a Pauli string");
    }
    for (std::size_t a = 0; a < qubits.size(); ++a) {
        for (std::size_t b = a + 1; b < qubits.size(); ++b) {
            if (qubits[a] == qubits[b]) {
                throw UsageError(name + ": repeated qubit " + std::to_string(qubits[a]));
            }
        }
    }
    Gate g;
    g.kind = kind;
    g.duration_ns = qubits.size() == 1 ? kSingleQubitDurationNs : kMultiQubitDurationNs;
    g.qubits = std::move(qubits);
    g.param_index = param_index;
    g.pauli = std::move(pauli);
    return g;
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::size_t n_params)
    : n_qubits_(n_qubits), n_params_(n_params), gates_(std::move(gates)) {
    if (n_qubits_ == 0 || n_qubits_ > kMaxCircuitQubits) {
        throw UsageError("circuit qubit count must be in [1, 8]");
    }
    std::vector<bool> used(n_params_, false);
    for (const auto &g : gates_) {
        for (std::size_t q : g.qubits) {
            if (q >= n_qubits_) {
                throw UsageError(std::string(gate_kind_name(g.kind)) + " on qubit " + std::to_string(q) +
                                 " exceeds register of " + std::to_string(n_qubits_));
            }
        }
        if (g.param_index) {
            if (*g.param_index >= n_params_) {
                throw UsageError("parameter index t" + std::to_string(*g.param_index) + " >= n_params " +
                                 std::to_string(n_params_));
            }
            used[*g.param_index] = true;
        }
    }
    for (std::size_t i = 0; i < n_params_; ++i) {
        if (!used[i]) {
            throw UsageError("parameter t" + std::to_string(i) + " is never referenced");
        }
    }
}

Circuit Circuit::parse(std::string_view text, std::optional<std::size_t> n_qubits) {
    std::vector<Gate> gates;
    std::size_t max_qubit = 0;
    std::size_t n_params = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream toks(line);
        std::string kind_tok;
        if (!(toks >> kind_tok)) {
            continue;
        }
        const auto where = "circuit line " + std::to_string(line_no) + ": ";
        const auto kind = parse_gate_kind(kind_tok);
        if (!kind) {
            throw ConfigError(where + "unknown gate '" + kind_tok + "'");
        }
        std::string pauli;
        if (*kind == GateKind::prot && !(toks >> pauli)) {
            throw ConfigError(where + "prot needs a Pauli string");
        }
        std::vector<std::size_t> qubits;
        std::optional<std::size_t> param;
        std::string tok;
        while (toks >> tok) {
            if (tok.front() == 't') {
                const auto idx = parse_index(std::string_view(tok).substr(1));
                if (!idx || param) {
                    throw ConfigError(where + "bad parameter token '" + tok + "'");
                }
                param = idx;
            } else if (const auto q = parse_index(tok)) {
                qubits.push_back(*q);
            } else {
                throw ConfigError(where + "unexpected token '" + tok + "'");
            }
        }
        try {
            gates.push_back(Gate::make(*kind, std::move(qubits), param, pauli));
        } catch (const UsageError &e) {
            throw ConfigError(where + e.what());
        }
        for (std::size_t q : gates.back().qubits) {
            max_qubit = std::max(max_qubit, q);
        }
        if (param) {
            n_params = std::max(n_params, *param + 1);
        }
    }
    try {
        return Circuit(n_qubits.value_or(max_qubit + 1), std::move(gates), n_params);
    } catch (const UsageError &e) {
        throw ConfigError(std::string("circuit: ") + e.what());
    }
}

Circuit Circuit::load(const std::filesystem::path &path, std::optional<std::size_t> n_qubits) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open circuit file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), n_qubits);
}

}  // namespace vqn::qsim
