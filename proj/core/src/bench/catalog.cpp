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

#include "vqn/bench/catalog.hpp"

#include <cstdio>
#include <set>
#include <string>
#include <variant>

namespace vqn::bench {
namespace {

using qsim::GateKind;

FamilySpec with_noise(std::string name, std::set<GateKind> gates, qsim::ChannelSpec channel) {
    qsim::EstimatorSpec est = qsim::EstimatorSpec::with_shots(kDecoherenceShots);
    est.noise = qsim::NoiseModel({qsim::NoiseRule{std::move(gates), channel}});
    return {std::move(name), std::move(est)};
}

const std::set<GateKind> kAllGates{GateKind::x,  GateKind::y,  GateKind::z,  GateKind::h,   GateKind::rx,
                                   GateKind::ry, GateKind::rz, GateKind::cx, GateKind::prot};
const std::set<GateKind> kDepolGates{GateKind::x,  GateKind::y,  GateKind::z,  GateKind::h,
                                     GateKind::rx, GateKind::ry, GateKind::rz, GateKind::cx};

}  // namespace

std::vector<FamilySpec> family_catalog() {
    std::vector<FamilySpec> out;
    out.push_back({"ideal", qsim::EstimatorSpec::exact()});
    for (std::size_t shots : {256, 512, 1024, 6144}) {
        out.push_back({"SN-" + std::to_string(shots), qsim::EstimatorSpec::with_shots(shots)});
    }
    for (int pct : {1, 5, 10, 20}) {
        out.push_back(with_noise("DP-" + std::to_string(pct) + "%", {GateKind::rz}, qsim::PhaseDamping{pct / 100.0}));
    }
    for (int pct : {1, 5, 10, 20}) {
        out.push_back(with_noise("DEPOL-" + std::to_string(pct) + "%", kDepolGates, qsim::Depolarizing{pct / 100.0}));
    }
    for (int t2_us : {70, 80, 180, 380}) {
        const double t2 = t2_us * 1000.0;
        out.push_back(with_noise("T2=" + std::to_string(t2_us) + "us", kAllGates,
                                 qsim::ThermalRelaxation{t2 + 20000.0, t2}));
    }
    for (int t_ns : {50, 100, 200, 300}) {
        out.push_back(with_noise("TR-T1=" + std::to_string(t_ns) + "ns", kAllGates,
                                 qsim::ThermalRelaxation{double(t_ns), double(t_ns)}));
    }
    return out;
}

std::optional<FamilySpec> find_family(std::string_view name) {
    for (auto &f : family_catalog()) {
        if (f.name == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::string describe(const FamilySpec &family) {
    const auto &est = family.estimator;
    std::string out = est.shots ? "shots=" + std::to_string(*est.shots) : std::string("exact");
    if (!est.noise || est.noise->empty()) {
        return out;
    }
    for (const auto &rule : est.noise->rules()) {
        char buf[96];
        if (const auto *pd = std::get_if<qsim::PhaseDamping>(&rule.channel)) {
            std::snprintf(buf, sizeof buf, " phase_damping(lambda=%g)", pd->lambda);
        } else if (const auto *dp = std::get_if<qsim::Depolarizing>(&rule.channel)) {
            std::snprintf(buf, sizeof buf, " depolarizing(p=%g)", dp->p);
        } else {
            const auto &tr = std::get<qsim::ThermalRelaxation>(rule.channel);
            std::snprintf(buf, sizeof buf, " thermal_relaxation(T1=%gns, T2=%gns)", tr.t1_ns, tr.t2_ns);
        }
        out += buf;
        out += " on {";
        bool first = true;
        for (auto g : rule.gates) {
            out += (first ? "" : ",") + std::string(qsim::gate_kind_name(g));
            first = false;
        }
        out += "}";
    }
    return out;
}

}  // namespace vqn::bench
