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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "vqn/bench/run_record.hpp"
#include "vqn_tools/cli.hpp"

namespace {

namespace fs = std::filesystem;
using vqn::tools::run_cli;

struct Invocation {
    int code = 0;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "vqn-bench");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    Invocation r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::size_t count_lines(const fs::path &p) {
    std::ifstream in(p);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) {
        n += line.empty() ? 0 : 1;
    }
    return n;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("vqn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string &name, const std::string &text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    // Two optimizers over three families: "good" sits near the reference.
    fs::path synthetic_runs() {
        std::vector<vqn::bench::RunRecord> recs;
        std::mt19937_64 gen(1);
        std::normal_distribution<double> z(0.0, 0.01);
        for (const char *fam : {"ideal", "SN-256", "DEPOL-1%"}) {
            for (std::uint64_t s = 0; s < 10; ++s) {
                const double g0 = -2.06 + z(gen), g1 = -0.5 + z(gen);
                recs.push_back({fam, "good", s, g0, g1, g0 + g1, 100, true, 1.0, {}});
                const double b0 = -1.5 + 3 * z(gen), b1 = 0.2 + 3 * z(gen);
                recs.push_back({fam, "bad", s, b0, b1, b0 + b1, 200, false, 1.0, {}});
            }
        }
        std::ofstream out(dir_ / "runs.csv");
        vqn::bench::write_runs(out, recs);
        return dir_ / "runs.csv";
    }

    fs::path dir_;
};

TEST_F(Cli, CatalogListsTwentyOneFamilies) {
    const auto r = invoke({"catalog"});
    EXPECT_EQ(r.code, vqn::tools::kExitOk);
    std::istringstream in(r.out);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) {
        ++n;
    }
    EXPECT_EQ(n, 21u);
    EXPECT_NE(r.out.find("TR-T1=50ns"), std::string::npos);
}

TEST_F(Cli, RunWritesHeaderAndRecords) {
    const std::string data = VQN_DATA_DIR;
    const auto cfg = write("cfg.json", R"({"hamiltonian":")" + data + R"(/toy_h.txt","circuit":")" + data +
                                           R"(/toy_ansatz.txt","families":["ideal"],"optimizers":["powell"],"seeds":2})");
    const auto r = invoke({"run", "--config", cfg.string(), "--out", (dir_ / "runs.csv").string()});
    ASSERT_EQ(r.code, vqn::tools::kExitOk) << r.err;
    EXPECT_EQ(count_lines(dir_ / "runs.csv"), 3u);
    std::ifstream in(dir_ / "runs.csv");
    const auto recs = vqn::bench::read_runs(in);
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_NEAR(recs[0].e_sa, -2.5615528128088303, 1e-6);
}

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(invoke({"run", "--bogus"}).code, vqn::tools::kExitConfig);
    EXPECT_EQ(invoke({}).code, vqn::tools::kExitConfig);
    EXPECT_EQ(invoke({"catalog", "--help"}).code, vqn::tools::kExitOk);
    const auto bad = write("bad.json", R"({"families":["ideal"]})");
    const auto r = invoke({"run", "--config", bad.string(), "--out", (dir_ / "o.csv").string()});
    EXPECT_EQ(r.code, vqn::tools::kExitConfig);
    EXPECT_NE(r.err.find("config error"), std::string::npos);
    EXPECT_EQ(invoke({"run", "--config", (dir_ / "missing.json").string(), "--out", "x.csv"}).code,
              vqn::tools::kExitConfig);
}

TEST_F(Cli, BadRunsFileExitsThree) {
    const auto bad = write("runs.csv", "not,a,runs,file\n");
    EXPECT_EQ(invoke({"rank", "--runs", bad.string(), "--reference", "-2", "-0.5", "--out", dir_.string()}).code,
              vqn::tools::kExitData);
    EXPECT_EQ(invoke({"analyze", "--runs", (dir_ / "missing.csv").string(), "--per-optimizer", dir_.string()}).code,
              vqn::tools::kExitData);
}

TEST_F(Cli, RankFindsDominantOptimizer) {
    const auto runs = synthetic_runs();
    const auto out = dir_ / "rank";
    const auto r = invoke({"rank", "--runs", runs.string(), "--reference", "-2.0615528128088303", "-0.5", "--out",
                           out.string()});
    ASSERT_EQ(r.code, vqn::tools::kExitOk) << r.err;
    const auto opt = slurp(out / "distance_optimizers.csv");
    std::istringstream in(opt);
    std::string line;
    std::getline(in, line);
    bool found = false;
    while (std::getline(in, line)) {
        if (line.rfind("good,", 0) == 0) {
            found = true;
            EXPECT_EQ(line.substr(line.rfind(',') + 1), "3");
        }
    }
    EXPECT_TRUE(found);
    const auto places = slurp(out / "rank_places.csv");
    EXPECT_NE(places.find("family,good,bad"), std::string::npos);
    EXPECT_NE(places.find("ideal,1,2"), std::string::npos) << places;
    EXPECT_TRUE(fs::exists(out / "friedman.json"));
    EXPECT_TRUE(fs::exists(out / "wilcoxon_holm.csv"));
}

TEST_F(Cli, AnalyzeWritesPerOptimizerFiles) {
    const auto runs = synthetic_runs();
    const auto out = dir_ / "analysis";
    const auto r = invoke({"analyze", "--runs", runs.string(), "--per-optimizer", out.string(), "--n-perm", "99",
                           "--n-boot", "50"});
    ASSERT_EQ(r.code, vqn::tools::kExitOk) << r.err;
    for (const char *opt : {"good", "bad"}) {
        for (const char *file : {"summary.csv", "mardia.json", "box_m.json", "levene.json", "brown_forsythe.json",
                                 "permanova.json", "permdisp.json", "pairwise_permanova_bh.csv",
                                 "pairwise_permdisp_bh.csv", "ellipses.csv"}) {
            EXPECT_TRUE(fs::exists(out / opt / file)) << opt << "/" << file;
        }
    }
    EXPECT_EQ(count_lines(out / "good" / "summary.csv"), 4u);
}

}  // namespace
