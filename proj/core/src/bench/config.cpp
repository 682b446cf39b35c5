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

#include "vqn/bench/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "vqn/errors.hpp"

namespace vqn::bench {
namespace {

using nlohmann::json;

template <class T>
T get_or(const json &j, const char *key, T fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config field '") + key + "': " + e.what());
    }
}

std::set<qsim::GateKind> parse_gates(const json &j) {
    std::set<qsim::GateKind> out;
    if (j.is_string() && j.get<std::string>() == "all") {
        for (auto k : {qsim::GateKind::x, qsim::GateKind::y, qsim::GateKind::z, qsim::GateKind::h, qsim::GateKind::rx,
                       qsim::GateKind::ry, qsim::GateKind::rz, qsim::GateKind::cx, qsim::GateKind::prot}) {
            out.insert(k);
        }
        return out;
    }
    if (!j.is_array()) {
        throw ConfigError("noise rule 'gates' must be \"all\" or a list of gate names");
    }
    for (const auto &g : j) {
        const auto kind = g.is_string() ? qsim::parse_gate_kind(g.get<std::string>()) : std::nullopt;
        if (!kind) {
            throw ConfigError("unknown gate in noise rule: " + g.dump());
        }
        out.insert(*kind);
    }
    return out;
}

FamilySpec parse_family(const json &j) {
    if (j.is_string()) {
        auto f = find_family(j.get<std::string>());
        if (!f) {
            throw ConfigError("unknown family '" + j.get<std::string>() + "'");
        }
        return *f;
    }
    if (!j.is_object() || !j.contains("name")) {
        throw ConfigError("custom family needs a 'name'");
    }
    FamilySpec f;
    f.name = j.at("name").get<std::string>();
    if (j.contains("shots") && !j.at("shots").is_null()) {
        const auto shots = j.at("shots").get<long long>();
        if (shots < 1) {
            throw ConfigError("family '" + f.name + "': shots must be >= 1");
        }
        f.estimator.shots = static_cast<std::size_t>(shots);
    }
    if (j.contains("noise")) {
        std::vector<qsim::NoiseRule> rules;
        for (const auto &r : j.at("noise")) {
            qsim::NoiseRule rule;
            rule.gates = parse_gates(r.contains("gates") ? r.at("gates") : json("all"));
            const auto channel = get_or<std::string>(r, "channel", "");
            if (channel == "phase_damping") {
                rule.channel = qsim::PhaseDamping{get_or<double>(r, "lambda", 0.0)};
            } else if (channel == "depolarizing") {
                rule.channel = qsim::Depolarizing{get_or<double>(r, "p", 0.0)};
            } else if (channel == "thermal_relaxation") {
                rule.channel = qsim::ThermalRelaxation{get_or<double>(r, "t1_ns", 0.0), get_or<double>(r, "t2_ns", 0.0)};
            } else {
                throw ConfigError("family '" + f.name + "': unknown channel '" + channel + "'");
            }
            rules.push_back(std::move(rule));
        }
        try {
            f.estimator.noise = qsim::NoiseModel(std::move(rules));
        } catch (const std::invalid_argument &e) {
            throw ConfigError("family '" + f.name + "': " + e.what());
        }
    }
    return f;
}

OptimizerEntry parse_optimizer(const json &j) {
    OptimizerEntry e;
    const std::string name = j.is_string() ? j.get<std::string>() : get_or<std::string>(j, "kind", "");
    const auto kind = opt::parse_optimizer_kind(name);
    if (!kind) {
        throw ConfigError("unknown optimizer '" + name + "'");
    }
    e.spec.kind = *kind;
    if (j.is_object()) {
        e.spec.maxiter = get_or<std::size_t>(j, "maxiter", e.spec.maxiter);
        e.spec.ftol = get_or<double>(j, "ftol", e.spec.ftol);
        if (j.contains("gradient_step")) {
            e.spec.gradient_step = j.at("gradient_step").get<double>();
            e.auto_gradient_step = false;
        }
        if (j.contains("isoma")) {
            const json &p = j.at("isoma");
            auto &ip = e.spec.isoma;
            ip.n_jump = get_or<std::size_t>(p, "n_jump", ip.n_jump);
            ip.step = get_or<double>(p, "step", ip.step);
            ip.pop_size = get_or<std::size_t>(p, "pop_size", ip.pop_size);
            ip.max_migration = get_or<std::size_t>(p, "max_migration", ip.max_migration);
            ip.max_fes = get_or<std::size_t>(p, "max_fes", ip.max_fes);
            ip.var_min = get_or<double>(p, "var_min", ip.var_min);
            ip.var_max = get_or<double>(p, "var_max", ip.var_max);
            ip.m = get_or<std::size_t>(p, "m", ip.m);
            ip.n = get_or<std::size_t>(p, "n", ip.n);
            ip.k = get_or<std::size_t>(p, "k", ip.k);
            ip.prt = get_or<double>(p, "prt", ip.prt);
        }
    }
    try {
        e.spec.validate();
    } catch (const std::invalid_argument &err) {
        throw ConfigError("optimizer '" + name + "': " + err.what());
    }
    return e;
}

ExperimentConfig from_json(const json &j, const std::filesystem::path &base_dir) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    ExperimentConfig cfg;
    auto path_field = [&](const char *key) {
        const auto s = get_or<std::string>(j, key, "");
        if (s.empty()) {
            throw ConfigError(std::string("config needs '") + key + "'");
        }
        const std::filesystem::path p(s);
        return p.is_absolute() ? p : base_dir / p;
    };
    cfg.hamiltonian_path = path_field("hamiltonian");
    cfg.circuit_path = path_field("circuit");
    cfg.phi_a = get_or<std::size_t>(j, "phi_a", cfg.phi_a);
    cfg.phi_b = get_or<std::size_t>(j, "phi_b", cfg.phi_b);

    const json families = j.contains("families") ? j.at("families") : json("all");
    if (families.is_string() && families.get<std::string>() == "all") {
        cfg.families = family_catalog();
    } else if (families.is_array()) {
        for (const auto &f : families) {
            cfg.families.push_back(parse_family(f));
        }
    } else {
        throw ConfigError("'families' must be \"all\" or a list");
    }

    const json optimizers = j.contains("optimizers") ? j.at("optimizers") : json("all");
    if (optimizers.is_string() && optimizers.get<std::string>() == "all") {
        for (auto k : {"bfgs", "slsqp", "nelder_mead", "powell", "cobyla", "isoma"}) {
            cfg.optimizers.push_back(parse_optimizer(json(k)));
        }
    } else if (optimizers.is_array()) {
        for (const auto &o : optimizers) {
            cfg.optimizers.push_back(parse_optimizer(o));
        }
    } else {
        throw ConfigError("'optimizers' must be \"all\" or a list");
    }

    if (j.contains("seeds")) {
        const json &s = j.at("seeds");
        cfg.seeds.clear();
        if (s.is_number_unsigned() || s.is_number_integer()) {
            for (std::uint64_t i = 0; i < s.get<std::uint64_t>(); ++i) {
                cfg.seeds.push_back(i);
            }
        } else {
            cfg.seeds = get_or<std::vector<std::uint64_t>>(j, "seeds", {});
        }
    }

    if (j.contains("theta0")) {
        const json &t = j.at("theta0");
        const std::string policy = t.is_string() ? t.get<std::string>() : get_or<std::string>(t, "policy", "");
        if (policy == "zeros") {
            cfg.theta0 = Theta0Policy::zeros;
        } else if (policy == "uniform") {
            cfg.theta0 = Theta0Policy::uniform;
            if (t.is_object()) {
                cfg.theta0_min = get_or<double>(t, "min", cfg.theta0_min);
                cfg.theta0_max = get_or<double>(t, "max", cfg.theta0_max);
            }
        } else {
            throw ConfigError("theta0 policy must be 'zeros' or 'uniform'");
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (families.empty() || optimizers.empty() || seeds.empty()) {
        throw ConfigError("config needs non-empty families, optimizers and seeds");
    }
    std::set<std::string> names;
    for (const auto &f : families) {
        if (!names.insert(f.name).second) {
            throw ConfigError("duplicate family name '" + f.name + "'");
        }
        if (f.name.find(',') != std::string::npos) {
            throw ConfigError("family names must not contain commas");
        }
    }
    if (phi_a == phi_b) {
        throw ConfigError("phi_a and phi_b must be different basis states");
    }
    if (theta0 == Theta0Policy::uniform && !(theta0_min < theta0_max)) {
        throw ConfigError("theta0 uniform range must satisfy min < max");
    }
}

ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path &base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return from_json(j, base_dir);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config has a field of the wrong type: ") + e.what());
    }
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.parent_path());
}

}  // namespace vqn::bench
