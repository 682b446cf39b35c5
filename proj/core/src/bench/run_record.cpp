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

#include "vqn/bench/run_record.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vqn/errors.hpp"

namespace vqn::bench {
namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string &s, std::size_t line) {
    if (s == "nan" || s == "-nan") {
        return std::nan("");
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw DataError("runs line " + std::to_string(line) + ": not a number: '" + s + "'");
    }
}

template <class Int>
Int parse_int(const std::string &s, std::size_t line) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DataError("runs line " + std::to_string(line) + ": not an integer: '" + s + "'");
    }
    return v;
}

}  // namespace

bool RunRecord::finite() const noexcept {
    return std::isfinite(e_ground) && std::isfinite(e_excited) && std::isfinite(e_sa);
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_record(const RunRecord &r) {
    std::string out;
    out += r.family + ',' + r.optimizer + ',' + std::to_string(r.seed) + ',';
    out += format_double(r.e_ground) + ',' + format_double(r.e_excited) + ',' + format_double(r.e_sa) + ',';
    out += std::to_string(r.n_evals) + ',' + (r.converged ? "1" : "0") + ',' + format_double(r.wall_time_ms);
    return out;
}

void write_runs(std::ostream &out, std::span<const RunRecord> records) {
    out << kRunsHeader << '\n';
    for (const auto &r : records) {
        out << format_record(r) << '\n';
    }
}

std::vector<RunRecord> read_runs(std::istream &in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw DataError("runs file is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kRunsHeader) {
        throw DataError("runs file: unexpected header '" + line + "'");
    }
    std::vector<RunRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != 9) {
            throw DataError("runs line " + std::to_string(line_no) + ": expected 9 fields, got " +
                            std::to_string(cells.size()));
        }
        RunRecord r;
        r.family = cells[0];
        r.optimizer = cells[1];
        r.seed = parse_int<std::uint64_t>(cells[2], line_no);
        r.e_ground = parse_double(cells[3], line_no);
        r.e_excited = parse_double(cells[4], line_no);
        r.e_sa = parse_double(cells[5], line_no);
        r.n_evals = parse_int<std::size_t>(cells[6], line_no);
        if (cells[7] != "0" && cells[7] != "1") {
            throw DataError("runs line " + std::to_string(line_no) + ": converged must be 0 or 1");
        }
        r.converged = cells[7] == "1";
        r.wall_time_ms = parse_double(cells[8], line_no);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RunRecord> read_runs_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open runs file " + path.string());
    }
    return read_runs(in);
}

}  // namespace vqn::bench
