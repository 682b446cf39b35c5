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

#include "vqn_tools/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vqn/bench/catalog.hpp"
#include "vqn/bench/config.hpp"
#include "vqn/bench/report.hpp"
#include "vqn/bench/run_record.hpp"
#include "vqn/bench/runner.hpp"
#include "vqn/errors.hpp"

namespace vqn::tools {
namespace {

int cmd_run(const std::string &config_path, const std::string &out_path, std::size_t jobs, std::ostream &out,
            std::ostream &err) {
    const auto cfg = bench::load_config(config_path);
    std::ofstream csv(out_path);
    if (!csv) {
        throw DataError("cannot write " + out_path);
    }
    csv << bench::kRunsHeader << '\n';
    std::size_t done = 0, failed = 0;
    bench::RunOptions options;
    options.jobs = jobs;
    options.on_record = [&](const bench::RunRecord &r) {
        csv << bench::format_record(r) << '\n';
        csv.flush();
        ++done;
        if (!r.finite()) {
            ++failed;
            err << "run " << r.family << '/' << r.optimizer << '/' << r.seed << " aborted: " << r.diagnostic << '\n';
        }
    };
    bench::run_experiment(cfg, options);
    out << "wrote " << done << " records to " << out_path;
    if (failed) {
        out << " (" << failed << " aborted)";
    }
    out << '\n';
    return kExitOk;
}

int cmd_analyze(const std::string &runs, const std::string &dir, const bench::AnalyzeOptions &opts,
                std::ostream &out) {
    const auto records = bench::read_runs_file(runs);
    if (records.empty()) {
        throw DataError("runs file has no records");
    }
    const std::size_t failures = bench::analyze_runs(records, dir, opts, out);
    out << "analysis written to " << dir;
    if (failures) {
        out << " (" << failures << " tests not computable, see JSON errors)";
    }
    out << '\n';
    return kExitOk;
}

int cmd_rank(const std::string &runs, const std::vector<double> &reference, const std::string &dir,
             std::ostream &out) {
    const auto records = bench::read_runs_file(runs);
    bench::rank_runs(records, Eigen::Vector2d(reference[0], reference[1]), dir, out);
    out << "rankings written to " << dir << '\n';
    return kExitOk;
}

int cmd_catalog(std::ostream &out) {
    for (const auto &f : bench::family_catalog()) {
        out << f.name << '\t' << bench::describe(f) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Optimizer benchmarking on noisy state-averaged VQE costs", "vqn-bench"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "Run every (family, optimizer, seed) cell of a config");
    std::string config_path, out_path;
    std::size_t jobs = 1;
    run->add_option("--config", config_path, "Experiment config (JSON)")->required();
    run->add_option("--out", out_path, "Runs CSV to write")->required();
    run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto *analyze = app.add_subcommand("analyze", "Per-optimizer statistical battery");
    std::string runs_path, per_opt_dir;
    bench::AnalyzeOptions aopts;
    analyze->add_option("--runs", runs_path, "Runs CSV")->required();
    analyze->add_option("--per-optimizer", per_opt_dir, "Output directory")->required();
    analyze->add_option("--n-perm", aopts.n_perm, "Permutations per test")->check(CLI::PositiveNumber);
    analyze->add_option("--n-boot", aopts.n_boot, "Bootstrap resamples per ellipse")->check(CLI::PositiveNumber);
    analyze->add_option("--seed", aopts.seed, "Seed for permutations and bootstrap");

    auto *rank = app.add_subcommand("rank", "Distance metrics and optimizer rankings");
    std::string rank_runs, rank_dir = ".";
    std::vector<double> reference;
    rank->add_option("--runs", rank_runs, "Runs CSV")->required();
    rank->add_option("--reference", reference, "Reference energies E0 E1")->required()->expected(2);
    rank->add_option("--out", rank_dir, "Output directory");

    auto *catalog = app.add_subcommand("catalog", "List the standard noise families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) {
            return cmd_run(config_path, out_path, jobs, out, err);
        }
        if (analyze->parsed()) {
            return cmd_analyze(runs_path, per_opt_dir, aopts, out);
        }
        if (rank->parsed()) {
            return cmd_rank(rank_runs, reference, rank_dir, out);
        }
        if (catalog->parsed()) {
            return cmd_catalog(out);
        }
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const CapacityError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DataError &e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const DegenerateSampleError &e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    err << app.help();
    return kExitConfig;
}

}  // namespace vqn::tools
