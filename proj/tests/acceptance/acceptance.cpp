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


// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "vqn/bench/config.hpp"
#include "vqn/bench/run_record.hpp"
#include "vqn/bench/runner.hpp"
#include "vqn/opt/optimizer.hpp"
#include "vqn/qsim/circuit.hpp"
#include "vqn/qsim/estimator.hpp"
#include "vqn/qsim/kraus.hpp"
#include "vqn/qsim/noise_model.hpp"
#include "vqn/qsim/pauli_sum.hpp"
#include "vqn/stats/ellipse.hpp"
#include "vqn/stats/normality.hpp"
#include "vqn/stats/homogeneity.hpp"
#include "vqn/stats/p_adjust.hpp"
#include "vqn/stats/permutation.hpp"
#include "vqn/stats/rank_tests.hpp"
#include "vqn/vqe/ensemble.hpp"

#ifdef VQN_HAVE_CLI
#include "vqn_tools/cli.hpp"
#endif

namespace {

namespace fs = std::filesystem;
using namespace vqn;

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Verdict()> check;
};

std::string fmt(const char *f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

const std::string kData = VQN_DATA_DIR;

qsim::PauliSum toy_h() {
    return qsim::PauliSum::load(kData + "/toy_h.txt");
}

qsim::Circuit toy_ansatz() {
    return qsim::Circuit::load(kData + "/toy_ansatz.txt", 2);
}

// Oracle two-state bound from a from-scratch Jacobi diagonalization.
double oracle_esa(const qsim::PauliSum &h) {
    std::vector<std::pair<double, std::string>> terms;
    for (const auto &t : h.terms()) {
        terms.emplace_back(t.coefficient, t.pauli);
    }
    const auto ev = oracle::hermitian_eigenvalues(oracle::dense_hamiltonian(terms));
    return ev[0] + ev[1];
}

// ---- 1 ----
Verdict channel_analytics() {
    double worst = 0.0;
    const std::size_t q0[] = {0};
    Eigen::MatrixXcd plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    const auto rho_plus = qsim::DensityMatrix(plus);
    for (double lambda : {0.0, 0.01, 0.2, 0.5, 0.9, 1.0}) {
        const auto out = qsim::apply_channel(rho_plus, qsim::kraus_phase_damping(lambda), q0);
        worst = std::max(worst, std::abs(out(0, 1) - 0.5 * std::sqrt(1.0 - lambda)));
    }
    std::mt19937_64 gen(1);
    for (std::size_t arity : {1u, 2u}) {
        const auto d = Eigen::Index{1} << arity;
        std::vector<std::size_t> qs(arity);
        std::iota(qs.begin(), qs.end(), 0);
        const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
        for (double p : {0.01, 0.3, 1.0}) {
            const auto fixed = qsim::apply_channel(qsim::DensityMatrix(mixed), qsim::kraus_depolarizing(p, arity), qs);
            worst = std::max(worst, (fixed.matrix() - mixed).cwiseAbs().maxCoeff());
        }
        const auto rho = qsim::DensityMatrix(oracle::random_density(d, gen));
        const auto full = qsim::apply_channel(rho, qsim::kraus_depolarizing(1.0, arity), qs);
        worst = std::max(worst, (full.matrix() - mixed).cwiseAbs().maxCoeff());
    }
    const auto one = qsim::DensityMatrix::basis_state(1, 1);
    for (const auto &[t, t1, t2] : {std::tuple{50.0, 50.0, 50.0}, std::tuple{150.0, 100.0, 70.0},
                                    std::tuple{50.0, 90000.0, 70000.0}, std::tuple{300.0, 200.0, 400.0}}) {
        const auto ch = qsim::kraus_thermal_relaxation(t, t1, t2);
        const auto pop = qsim::apply_channel(one, ch, q0);
        worst = std::max(worst, std::abs(pop(1, 1).real() - std::exp(-t / t1)));
        const auto coh = qsim::apply_channel(rho_plus, ch, q0);
        worst = std::max(worst, std::abs(std::abs(coh(0, 1)) - 0.5 * std::exp(-t / t2)));
    }
    return {worst <= 1e-9, "max deviation " + fmt("%.3g", worst)};
}

// ---- 2 ----
Verdict variational_bound() {
    const auto h = toy_h();
    const double bound = oracle_esa(h);
    const vqe::EnsembleContext ctx(h, toy_ansatz(), 0, 1);
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(-2.0 * M_PI, 2.0 * M_PI);
    Rng rng(0);
    double min_gap = INFINITY;
    for (int k = 0; k < 1000; ++k) {
        const std::vector<double> t = {u(gen), u(gen), u(gen)};
        min_gap = std::min(min_gap, vqe::sa_cost(t, ctx, rng) - bound);
    }
    return {min_gap >= -1e-9, "min(cost - e_sa) = " + fmt("%.3g", min_gap)};
}

// ---- 3 ----
Verdict noiseless_convergence() {
    const double bound = oracle_esa(toy_h());
    const auto cfg = bench::parse_config(
        R"({"hamiltonian":"toy_h.txt","circuit":"toy_ansatz.txt","families":["ideal"],"optimizers":"all","seeds":3})",
        kData);
    const auto recs = bench::run_experiment(cfg);
    bool ok = true;
    std::string detail;
    for (const auto &entry : cfg.optimizers) {
        const std::string name(opt::optimizer_name(entry.spec.kind));
        double worst = 0.0;
        for (const auto &r : recs) {
            if (r.optimizer == name) {
                worst = std::max(worst, r.finite() ? std::abs(r.e_sa - bound) : INFINITY);
            }
        }
        const double tol = entry.spec.kind == opt::OptimizerKind::isoma ? 1e-2 : 1e-6;
        ok = ok && worst <= tol;
        detail += name + "=" + fmt("%.2g", worst) + " ";
    }
    return {ok, "max |e_sa - oracle|: " + detail};
}

// ---- 4 ----
Verdict shot_unbiasedness() {
    const auto h = toy_h();
    std::mt19937_64 gen(4);
    const auto rho = qsim::DensityMatrix(oracle::random_density(4, gen));
    double exact = 0.0, var = 0.0;
    const std::size_t n_m = 256;
    for (const auto &t : h.terms()) {
        const double e = (rho.matrix() * oracle::pauli_string(t.pauli)).trace().real();
        exact += t.coefficient * e;
        if (!t.is_identity()) {
            var += t.coefficient * t.coefficient * (1.0 - e * e) / static_cast<double>(n_m);
        }
    }
    const int reps = 10000;
    double sum = 0.0;
    for (int s = 0; s < reps; ++s) {
        Rng rng(derive_seed(77, static_cast<std::uint64_t>(s)));
        sum += qsim::expectation_shots(rho, h, n_m, rng);
    }
    const double se = std::sqrt(var) / std::sqrt(static_cast<double>(reps));
    const double z = (sum / reps - exact) / se;
    return {std::abs(z) <= 5.0, "mean offset = " + fmt("%.2f", z) + " standard errors"};
}

// ---- 5 ----
Verdict permutation_oracles() {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> z;
    const std::vector<std::vector<int>> layouts = {{0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 2, 2, 2},
                                                   {0, 0, 0, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 2, 2},
                                                   {0, 0, 0, 1, 1, 1}};
    double worst = 0.0;
    int fixtures = 0;
    for (const auto &labels : layouts) {
        const int groups = *std::max_element(labels.begin(), labels.end()) + 1;
        for (int rep = 0; rep < 3; ++rep) {
            stats::Observations x(static_cast<Eigen::Index>(labels.size()), 2);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                const double scale = 1.0 + 2.0 * labels[i] * rep;
                x(static_cast<Eigen::Index>(i), 0) = scale * z(gen) + 0.7 * labels[i];
                x(static_cast<Eigen::Index>(i), 1) = scale * z(gen);
            }
            const std::vector<std::size_t> codes(labels.begin(), labels.end());
            Rng r1(0), r2(0);
            const double p_pa = stats::permanova(x, codes, r1).p;
            const double p_pd = stats::permdisp(x, codes, r2).p;
            const double o_pa = oracle::exhaustive_p(
                labels, [&](const std::vector<int> &l) { return oracle::centroid_pseudo_f(x, l, groups); });
            std::vector<double> dist(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i) {
                Eigen::RowVector2d c = Eigen::RowVector2d::Zero();
                int n = 0;
                for (std::size_t j = 0; j < labels.size(); ++j) {
                    if (labels[j] == labels[i]) {
                        c += x.row(static_cast<Eigen::Index>(j));
                        ++n;
                    }
                }
                dist[i] = (x.row(static_cast<Eigen::Index>(i)) - c / n).norm();
            }
            const double o_pd = oracle::exhaustive_p(
                labels, [&](const std::vector<int> &l) { return oracle::anova_f(dist, l, groups); });
            worst = std::max({worst, std::abs(p_pa - o_pa), std::abs(p_pd - o_pd)});
            fixtures += 2;
        }
    }
    // 21 groups of 10.
    stats::Observations big(210, 2);
    std::vector<std::size_t> codes(210);
    for (Eigen::Index i = 0; i < 210; ++i) {
        big(i, 0) = z(gen);
        big(i, 1) = z(gen);
        codes[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i / 10);
    }
    Rng rng(1);
    const auto r = stats::permanova(big, codes, rng, {.n_perm = 99});
    const bool df_ok = r.df.size() == 2 && r.df[0] == 20.0 && r.df[1] == 189.0;
    return {worst <= 1e-12 && df_ok, std::to_string(fixtures) + " exhaustive fixtures, max |p - oracle| = " +
                                         fmt("%.2g", worst) + ", df = (" + fmt("%g", r.df[0]) + ", " +
                                         fmt("%g", r.df[1]) + ")"};
}

// ---- 6 ----
// Kendall's W with tie correction, from rank sums computed by counting.
double kendall_w(const Eigen::MatrixXd &v) {
    const auto n = static_cast<double>(v.rows());
    const auto k = static_cast<double>(v.cols());
    Eigen::VectorXd sums = Eigen::VectorXd::Zero(v.cols());
    double ties = 0.0;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            double less = 0.0, equal = 0.0;
            for (Eigen::Index m = 0; m < v.cols(); ++m) {
                less += v(i, m) < v(i, j) ? 1.0 : 0.0;
                equal += v(i, m) == v(i, j) ? 1.0 : 0.0;
            }
            sums[j] += less + (equal + 1.0) / 2.0;
            ties += equal * equal - 1.0;  // a tie group of size t adds t^3 - t
        }
    }
    const double s = (sums.array() - n * (k + 1.0) / 2.0).square().sum();
    return 12.0 * s / (n * n * (k * k * k - k) - n * ties);
}

Verdict friedman_identity() {
    std::mt19937_64 gen(6);
    std::uniform_int_distribution<int> level(0, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 2 + trial % 20, k = 3 + trial % 5;
        Eigen::MatrixXd v(n, k);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) {
                v(i, j) = trial % 2 == 0 ? static_cast<double>(level(gen)) : static_cast<double>(j);
            }
            if (trial % 2 == 1) {
                std::shuffle(v.row(i).begin(), v.row(i).end(), gen);
            }
        }
        const double w = kendall_w(v);
        if (!std::isfinite(w)) {
            continue;  // every block fully tied
        }
        const auto r = stats::friedman_test(v);
        worst = std::max(worst, std::abs(r.statistic - static_cast<double>(n * (k - 1)) * w));
    }
    const double w_published = 54.35 / (21.0 * 5.0);
    const bool pair_ok = std::abs(w_published - 0.518) <= 1e-3;
    return {worst <= 1e-9 && pair_ok,
            "max |chi2 - n(k-1)W| = " + fmt("%.2g", worst) + ", 54.35/(21*5) = " + fmt("%.4f", w_published)};
}

// ---- 7 ----
Verdict df_reproduction() {
    std::mt19937_64 gen(7);
    std::normal_distribution<double> z;
    std::vector<stats::Observations> groups;
    for (int g = 0; g < 21; ++g) {
        stats::Observations x(10, 2);
        for (Eigen::Index i = 0; i < 10; ++i) {
            x(i, 0) = z(gen);
            x(i, 1) = z(gen);
        }
        groups.push_back(x);
    }
    const auto mardia = stats::mardia_test(groups[0]);
    const auto box = stats::box_m_test(groups);
    const bool ok = mardia.skewness.df.at(0) == 4.0 && box.df.at(0) == 60.0;
    return {ok, "mardia df = " + fmt("%g", mardia.skewness.df.at(0)) + ", box M df = " + fmt("%g", box.df.at(0))};
}

// ---- 8 ----
std::vector<double> holm_reference(const std::vector<double> &p) {
    const std::size_t m = p.size();
    std::vector<std::size_t> o(m);
    std::iota(o.begin(), o.end(), 0);
    std::stable_sort(o.begin(), o.end(), [&](auto a, auto b) { return p[a] < p[b]; });
    std::vector<double> out(m);
    double run = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        run = std::max(run, std::min(1.0, static_cast<double>(m - i) * p[o[i]]));
        out[o[i]] = run;
    }
    return out;
}

std::vector<double> bh_reference(const std::vector<double> &p) {
    const std::size_t m = p.size();
    std::vector<std::size_t> o(m);
    std::iota(o.begin(), o.end(), 0);
    std::stable_sort(o.begin(), o.end(), [&](auto a, auto b) { return p[a] < p[b]; });
    std::vector<double> out(m);
    double run = 1.0;
    for (std::size_t i = m; i-- > 0;) {
        run = std::min(run, static_cast<double>(m) / static_cast<double>(i + 1) * p[o[i]]);
        out[o[i]] = run;
    }
    return out;
}

Verdict corrections() {
    const std::vector<std::vector<double>> fixtures = {
        {0.01, 0.02, 0.03}, {0.04, 0.001, 0.03, 0.5}, {0.2, 0.2, 0.2}, {1.0, 0.0}, {0.011, 0.01, 0.5, 0.04, 0.03}};
    double worst = 0.0;
    for (const auto &p : fixtures) {
        const auto h = stats::p_adjust_holm(p), hr = holm_reference(p);
        const auto b = stats::p_adjust_bh(p), br = bh_reference(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            worst = std::max({worst, std::abs(h[i] - hr[i]), std::abs(b[i] - br[i])});
        }
    }
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::size_t violations = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        std::vector<double> p(1 + gen() % 10);
        for (auto &v : p) {
            v = u(gen) * u(gen);
        }
        const auto h = stats::p_adjust_holm(p);
        const auto b = stats::p_adjust_bh(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            violations += (h[i] < p[i] || b[i] < p[i] || h[i] > 1.0 || b[i] > h[i] + 1e-15) ? 1 : 0;
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (p[i] < p[j] && (h[i] > h[j] || b[i] > b[j])) {
                    ++violations;
                }
            }
        }
    }
    return {worst == 0.0 && violations == 0,
            "fixture deviation " + fmt("%.2g", worst) + ", monotonicity violations " + std::to_string(violations)};
}

// ---- 9 ----
Verdict ellipse_calibration() {
    std::mt19937_64 gen(9);
    std::normal_distribution<double> z;
    stats::Observations x(10000, 2);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        x(i, 0) = z(gen);
        x(i, 1) = z(gen);
    }
    Rng rng(9);
    const auto e = stats::bootstrap_ellipse(x, rng);
    std::size_t inside = 0;
    const int fresh = 10000;
    for (int i = 0; i < fresh; ++i) {
        inside += stats::ellipse_contains(e, Eigen::Vector2d(z(gen), z(gen))) ? 1 : 0;
    }
    const double coverage = static_cast<double>(inside) / fresh;
    const bool ok = std::abs(e.d95_sq / 5.991 - 1.0) <= 0.10 && coverage >= 0.93 && coverage <= 0.97;
    return {ok, "d95_sq = " + fmt("%.3f", e.d95_sq) + ", coverage = " + fmt("%.4f", coverage)};
}

// ---- 10 ----
double optimized_error(const vqe::EnsembleContext &base, const std::optional<qsim::NoiseModel> &noise, double bound) {
    qsim::EstimatorSpec spec = qsim::EstimatorSpec::exact();
    spec.noise = noise;
    const auto ctx = base.with_estimator(spec);
    vqe::EnsembleObjective f(ctx, 0);
    opt::OptimizerSpec os;
    Rng rng(0);
    const std::vector<double> theta0(ctx.n_params(), 0.0);
    const auto r = opt::minimize([&](std::span<const double> t) { return f(t); }, theta0, os, rng);
    const auto e = vqe::resolve_states(r.theta_best, ctx);
    return std::abs(e.e0 + e.e1 - bound);
}

Verdict noise_ordering() {
    const auto h = toy_h();
    const double bound = oracle_esa(h);
    const vqe::EnsembleContext base(h, toy_ansatz(), 0, 1);
    const std::set<qsim::GateKind> depol_gates{qsim::GateKind::x,  qsim::GateKind::y,  qsim::GateKind::z,
                                               qsim::GateKind::h,  qsim::GateKind::rx, qsim::GateKind::ry,
                                               qsim::GateKind::rz, qsim::GateKind::cx};
    std::vector<double> depol, dephase;
    std::string detail = "depol/dephase error:";
    for (double p : {0.01, 0.05, 0.10, 0.20}) {
        depol.push_back(optimized_error(base, qsim::NoiseModel({{depol_gates, qsim::Depolarizing{p}}}), bound));
        dephase.push_back(
            optimized_error(base, qsim::NoiseModel({{{qsim::GateKind::rz}, qsim::PhaseDamping{p}}}), bound));
        detail += " " + fmt("%.3g", depol.back()) + "/" + fmt("%.2g", dephase.back());
    }
    bool ok = true;
    for (std::size_t i = 0; i < depol.size(); ++i) {
        ok = ok && depol[i] >= dephase[i];
        if (i > 0) {
            ok = ok && depol[i] >= depol[i - 1];
        }
    }
    return {ok, detail};
}

// ---- 11 ----
std::string strip_wall_time(const std::string &csv) {
    std::istringstream in(csv);
    std::string out, line;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(',')) + "\n";
    }
    return out;
}

std::string run_to_csv(const fs::path &cfg_path, const fs::path &out, std::size_t jobs) {
#ifdef VQN_HAVE_CLI
    const std::string c = cfg_path.string(), o = out.string(), j = std::to_string(jobs);
    const char *argv[] = {"vqn-bench", "run", "--config", c.c_str(), "--out", o.c_str(), "--jobs", j.c_str()};
    std::ostringstream sink, err;
    if (tools::run_cli(8, argv, sink, err) != tools::kExitOk) {
        return "error: " + err.str();
    }
#else
    const auto cfg = bench::load_config(cfg_path);
    const auto recs = bench::run_experiment(cfg, {.jobs = jobs, .on_record = {}});
    std::ofstream f(out);
    bench::write_runs(f, recs);
#endif
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return strip_wall_time(ss.str());
}

Verdict determinism() {
    const fs::path dir = fs::temp_directory_path() / "vqn_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"hamiltonian":")" << kData << R"(/toy_h.txt","circuit":")" << kData
                       << R"(/toy_ansatz.txt","families":["ideal","SN-256","DEPOL-5%"],)"
                       << R"("optimizers":["bfgs","nelder_mead","isoma"],"seeds":5})";
    const auto a = run_to_csv(cfg, dir / "a.csv", 1);
    const auto b = run_to_csv(cfg, dir / "b.csv", 1);
    const auto c = run_to_csv(cfg, dir / "c.csv", 4);
    fs::remove_all(dir);
    const auto lines = static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n'));
    const bool ok = a == b && a == c && lines == 1 + 3 * 3 * 5;
    return {ok, std::to_string(lines - 1) + " records; repeat " + (a == b ? "identical" : "DIFFERS") + ", jobs=4 " +
                    (a == c ? "identical" : "DIFFERS")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "channel analytics", 1.0, channel_analytics},
        {2, "variational lower bound", 5.0, variational_bound},
        {3, "noiseless convergence", 30.0, noiseless_convergence},
        {4, "shot-noise unbiasedness", 30.0, shot_unbiasedness},
        {5, "permutation-test oracles", 10.0, permutation_oracles},
        {6, "Friedman/Kendall identity", 1.0, friedman_identity},
        {7, "degrees of freedom", 1.0, df_reproduction},
        {8, "p-value corrections", 5.0, corrections},
        {9, "bootstrap ellipse calibration", 60.0, ellipse_calibration},
        {10, "noise-ordering trend", 60.0, noise_ordering},
        {11, "end-to-end determinism", 120.0, determinism},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_s;
        const bool pass = v.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.2fs / %.0fs) %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.limit_s, v.detail.c_str(), in_time ? "" : " [over time limit]");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
