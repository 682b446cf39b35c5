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

#include "vqn/qsim/pauli_sum.hpp"

#include <bit>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "vqn/errors.hpp"

namespace vqn::qsim {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

PauliSum::PauliSum(std::vector<PauliTerm> terms) {
    if (terms.empty()) {
        throw UsageError("PauliSum needs at least one term");
    }
    n_qubits_ = terms.front().pauli.size();
    if (n_qubits_ == 0) {
        throw UsageError("Pauli strings must have at least one qubit");
    }
    std::unordered_map<std::string, std::size_t> index;
    for (auto &term : terms) {
        if (term.pauli.size() != n_qubits_) {
            throw UsageError("Pauli string '" + term.pauli + "' has length " +
                             std::to_string(term.pauli.size()) + ", expected " + std::to_string(n_qubits_));
        }
        if (term.pauli.find_first_not_of("IXYZ") != std::string::npos) {
            throw UsageError("Pauli string '" + term.pauli + "' contains letters outside {I,X,Y,Z}");
        }
        if (!std::isfinite(term.coefficient)) {
            throw UsageError("non-finite coefficient for '" + term.pauli + "'");
        }
        auto [it, inserted] = index.emplace(term.pauli, terms_.size());
        if (inserted) {
            terms_.push_back(std::move(term));
        } else {
            terms_[it->second].coefficient += term.coefficient;
        }
    }
}

PauliSum PauliSum::parse(std::string_view text) {
    std::vector<PauliTerm> terms;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::istringstream in{std::string(line)};
        std::string coeff_tok;
        std::string pauli;
        std::string extra;
        in >> coeff_tok >> pauli;
        if (pauli.empty() || (in >> extra)) {
            throw ConfigError("hamiltonian line " + std::to_string(line_no) +
                              ": expected '<coefficient> <pauli_string>'");
        }
        double coeff = 0.0;
        const auto *begin = coeff_tok.data();
        const auto *end = begin + coeff_tok.size();
        if (*begin == '+') {
            ++begin;
        }
        auto [ptr, ec] = std::from_chars(begin, end, coeff);
        if (ec != std::errc{} || ptr != end) {
            throw ConfigError("hamiltonian line " + std::to_string(line_no) + ": bad coefficient '" +
                              coeff_tok + "'");
        }
        terms.push_back({coeff, pauli});
    }
    try {
        return PauliSum(std::move(terms));
    } catch (const UsageError &e) {
        throw ConfigError(std::string("hamiltonian: ") + e.what());
    }
}

PauliSum PauliSum::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open hamiltonian file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

PauliSum PauliSum::scaled(double factor) const {
    auto terms = terms_;
    for (auto &t : terms) {
        t.coefficient *= factor;
    }
    return PauliSum(std::move(terms));
}

Matrix PauliSum::dense() const {
    if (n_qubits_ > kMaxQubits) {
        throw CapacityError("dense Hamiltonian limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    const auto d = static_cast<Eigen::Index>(dim());
    Matrix h = Matrix::Zero(d, d);
    for (const auto &t : terms_) {
        h += t.coefficient * pauli_string_matrix(t.pauli);
    }
    return h;
}

double PauliSum::identity_offset() const {
    double off = 0.0;
    for (const auto &t : terms_) {
        if (t.is_identity()) {
            off += t.coefficient;
        }
    }
    return off;
}

Complex pauli_trace(const Matrix &rho, std::string_view pauli) {
    const std::size_t n = pauli.size();
    if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != (std::size_t{1} << n)) {
        throw UsageError("Pauli string length does not match state dimension");
    }
    // P|j> = phase(j) |j ^ flip>, so Tr(rho P) = sum_j phase(j) rho(j, j ^ flip).
    std::size_t flip = 0;
    std::size_t y_mask = 0;
    std::size_t z_mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t b = std::size_t{1} << qubit_bit(n, q);
        switch (pauli[q]) {
            case 'X':
                flip |= b;
                break;
            case 'Y':
                flip |= b;
                y_mask |= b;
                break;
            case 'Z':
                z_mask |= b;
                break;
            case 'I':
                break;
            default:
                throw UsageError("invalid Pauli letter in '" + std::string(pauli) + "'");
        }
    }
    const int n_y = std::popcount(y_mask);
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < static_cast<std::size_t>(rho.rows()); ++j) {
        // Y|0> = i|1>, Y|1> = -i|0>: phase i^{n_y} (-1)^{popcount(j & y_mask)}
        int sign_exp = std::popcount(j & z_mask) + std::popcount(j & y_mask);
        Complex phase = (sign_exp & 1) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
        switch (n_y & 3) {
            case 1:
                phase *= Complex(0.0, 1.0);
                break;
            case 2:
                phase = -phase;
                break;
            case 3:
                phase *= Complex(0.0, -1.0);
                break;
            default:
                break;
        }
        acc += phase * rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j ^ flip));
    }
    return acc;
}

}  // namespace vqn::qsim
