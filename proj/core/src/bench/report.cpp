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

#include "vqn/bench/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

#include "vqn/bench/summary.hpp"
#include "vqn/errors.hpp"
#include "vqn/random.hpp"
#include "vqn/stats/distance.hpp"
#include "vqn/stats/ellipse.hpp"
#include "vqn/stats/homogeneity.hpp"
#include "vqn/stats/normality.hpp"
#include "vqn/stats/p_adjust.hpp"
#include "vqn/stats/permutation.hpp"
#include "vqn/stats/rank_tests.hpp"

namespace vqn::bench {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json number(double v) {
    if (std::isnan(v)) {
        return nullptr;
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

json to_json(const stats::TestResult &r) {
    json j;
    j["test"] = r.test;
    j["statistic"] = number(r.statistic);
    j["df"] = r.df;
    j["p"] = number(r.p);
    for (const auto &[k, v] : r.extras) {
        j[k] = number(v);
    }
    if (!r.flags.empty()) {
        j["flags"] = r.flags;
    }
    return j;
}

void write_json(const fs::path &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

std::ofstream open_csv(const fs::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    return out;
}

std::string cell(double v) {
    return std::isnan(v) ? "NA" : format_double(v);
}

void write_matrix_csv(const fs::path &path, const std::vector<std::string> &labels, const Eigen::MatrixXd &m) {
    auto out = open_csv(path);
    out << "family";
    for (const auto &l : labels) {
        out << ',' << l;
    }
    out << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << ',' << cell(m(i, j));
        }
        out << '\n';
    }
}

// Finite records of one optimizer grouped by family, in order of appearance.
std::vector<stats::Sample2D> samples_for(std::span<const RunRecord> records, const std::string &optimizer) {
    std::vector<stats::Sample2D> out;
    std::map<std::string, std::vector<Eigen::Vector2d>> points;
    std::vector<std::string> order;
    for (const auto &r : records) {
        if (r.optimizer != optimizer || !r.finite()) {
            continue;
        }
        if (!points.count(r.family)) {
            order.push_back(r.family);
        }
        points[r.family].emplace_back(r.e_ground, r.e_excited);
    }
    for (const auto &fam : order) {
        stats::Sample2D s;
        s.family = fam;
        s.optimizer = optimizer;
        const auto &pts = points[fam];
        s.points.resize(static_cast<Eigen::Index>(pts.size()), 2);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            s.points.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> optimizers_in(std::span<const RunRecord> records) {
    std::vector<std::string> out;
    for (const auto &r : records) {
        if (std::find(out.begin(), out.end(), r.optimizer) == out.end()) {
            out.push_back(r.optimizer);
        }
    }
    return out;
}

std::vector<std::string> families_in(std::span<const RunRecord> records) {
    std::vector<std::string> out;
    for (const auto &r : records) {
        if (std::find(out.begin(), out.end(), r.family) == out.end()) {
            out.push_back(r.family);
        }
    }
    return out;
}

}  // namespace

std::size_t analyze_runs(std::span<const RunRecord> records, const fs::path &out_dir, const AnalyzeOptions &options,
                         std::ostream &log) {
    std::size_t failures = 0;
    const stats::PermutationOptions perm{options.n_perm};
    for (const auto &optimizer : optimizers_in(records)) {
        const fs::path dir = out_dir / optimizer;
        fs::create_directories(dir);
        const auto samples = samples_for(records, optimizer);
        Rng rng(derive_seed(options.seed, fnv1a64(optimizer)));

        auto guarded = [&](const std::string &what, auto &&fn) -> json {
            try {
                return fn();
            } catch (const std::exception &e) {
                ++failures;
                log << optimizer << ": " << what << " failed: " << e.what() << '\n';
                return json{{"error", e.what()}};
            }
        };

        {
            auto out = open_csv(dir / "summary.csv");
            out << "family,n,mu_final,sigma_final,mu_evals,sigma_evals\n";
            std::vector<RunRecord> mine;
            for (const auto &r : records) {
                if (r.optimizer == optimizer) {
                    mine.push_back(r);
                }
            }
            for (const auto &c : summarize(mine)) {
                out << c.family << ',' << c.n << ',' << format_double(c.mu_final) << ','
                    << format_double(c.sigma_final) << ',' << format_double(c.mu_evals) << ','
                    << format_double(c.sigma_evals) << '\n';
            }
        }

        json mardia = json::array();
        for (const auto &s : samples) {
            json entry = guarded("mardia " + s.family, [&] {
                const auto m = stats::mardia_test(s.points);
                return json{{"b1", m.skewness.extras.at("b1")}, {"chi2", m.skewness.statistic},
                            {"df", m.skewness.df[0]},           {"p_skew", m.skewness.p},
                            {"b2", m.kurtosis.extras.at("b2")}, {"z_kurt", m.kurtosis.statistic},
                            {"p_kurt", m.kurtosis.p}};
            });
            entry["family"] = s.family;
            mardia.push_back(entry);
        }
        write_json(dir / "mardia.json", json{{"optimizer", optimizer}, {"families", mardia}});

        std::vector<stats::Observations> groups;
        for (const auto &s : samples) {
            groups.push_back(s.points);
        }
        write_json(dir / "box_m.json", guarded("box_m", [&] { return to_json(stats::box_m_test(groups)); }));
        for (auto center : {stats::Center::mean, stats::Center::median}) {
            const std::string name = center == stats::Center::mean ? "levene" : "brown_forsythe";
            write_json(dir / (name + ".json"), guarded(name, [&] {
                           const auto rs = stats::levene_like_by_column(groups, center);
                           return json{{"x", to_json(rs[0])}, {"y", to_json(rs[1])}};
                       }));
        }

        const auto pooled_codes = stats::pool(samples);
        const stats::Observations &pooled = pooled_codes.first;
        const stats::GroupCodes &codes = pooled_codes.second;
        write_json(dir / "permanova.json",
                   guarded("permanova", [&] { return to_json(stats::permanova(pooled, codes.codes, rng, perm)); }));
        write_json(dir / "permdisp.json",
                   guarded("permdisp", [&] { return to_json(stats::permdisp(pooled, codes.codes, rng, perm)); }));
        for (auto test : {stats::PairwiseTest::permanova, stats::PairwiseTest::permdisp}) {
            const std::string name = test == stats::PairwiseTest::permanova ? "permanova" : "permdisp";
            guarded("pairwise " + name, [&] {
                const auto pm = stats::pairwise_posthoc(pooled, codes, test, stats::Adjust::bh, rng, perm);
                write_matrix_csv(dir / ("pairwise_" + name + "_bh.csv"), pm.labels, pm.p_adjusted);
                for (const auto &d : pm.diagnostics) {
                    log << optimizer << ": pairwise " << name << ": " << d << '\n';
                }
                return json{};
            });
        }

        auto ell = open_csv(dir / "ellipses.csv");
        ell << "family,mu_x,mu_y,s_xx,s_xy,s_yy,d95_sq\n";
        for (const auto &s : samples) {
            guarded("ellipse " + s.family, [&] {
                const auto e = stats::bootstrap_ellipse(s.points, rng, options.n_boot);
                ell << s.family << ',' << format_double(e.mu[0]) << ',' << format_double(e.mu[1]) << ','
                    << format_double(e.sigma(0, 0)) << ',' << format_double(e.sigma(0, 1)) << ','
                    << format_double(e.sigma(1, 1)) << ',' << format_double(e.d95_sq) << '\n';
                return json{};
            });
        }
        log << optimizer << ": " << samples.size() << " families analyzed\n";
    }
    return failures;
}

void rank_runs(std::span<const RunRecord> records, const Eigen::Vector2d &reference, const fs::path &out_dir,
               std::ostream &log) {
    fs::create_directories(out_dir);
    std::vector<stats::DistancePoint> points;
    for (const auto &r : records) {
        if (r.finite()) {
            points.push_back({r.optimizer, r.family, Eigen::Vector2d(r.e_ground, r.e_excited)});
        }
    }
    if (points.empty()) {
        throw DataError("no finite run records to rank");
    }
    const auto report = stats::distance_metrics(points, reference);
    for (const auto &d : report.diagnostics) {
        log << "distance: " << d << '\n';
    }
    {
        auto out = open_csv(out_dir / "distance_cells.csv");
        out << "optimizer,family,n,centroid_e0,centroid_e1,centroid_distance,rms\n";
        for (const auto &c : report.cells) {
            out << c.optimizer << ',' << c.family << ',' << c.n << ',' << format_double(c.centroid[0]) << ','
                << format_double(c.centroid[1]) << ',' << format_double(c.centroid_distance) << ','
                << format_double(c.rms) << '\n';
        }
    }
    {
        auto out = open_csv(out_dir / "distance_optimizers.csv");
        out << "optimizer,mean_centroid_distance,rms,mean_place,sd_place,wins\n";
        for (const auto &o : report.optimizers) {
            out << o.optimizer << ',' << format_double(o.mean_centroid_distance) << ',' << format_double(o.rms)
                << ',' << format_double(o.mean_place) << ',' << format_double(o.sd_place) << ',' << o.wins << '\n';
        }
    }

    // Global comparison: blocks are families populated for every optimizer.
    const auto optimizers = optimizers_in(records);
    const auto families = families_in(records);
    std::map<std::pair<std::string, std::string>, double> centroid;
    for (const auto &c : report.cells) {
        centroid[{c.family, c.optimizer}] = c.centroid_distance;
    }
    std::vector<std::string> blocks;
    for (const auto &f : families) {
        const bool complete = std::all_of(optimizers.begin(), optimizers.end(),
                                          [&](const std::string &o) { return centroid.count({f, o}) > 0; });
        if (complete) {
            blocks.push_back(f);
        }
    }
    const auto k = static_cast<Eigen::Index>(optimizers.size());
    json global;
    if (blocks.size() >= 2 && k >= 2) {
        Eigen::MatrixXd m(static_cast<Eigen::Index>(blocks.size()), k);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (Eigen::Index o = 0; o < k; ++o) {
                m(static_cast<Eigen::Index>(b), o) = centroid.at({blocks[b], optimizers[static_cast<std::size_t>(o)]});
            }
        }
        const auto groups = stats::tied_rank_groups(m);
        global = to_json(groups.friedman);
        global["blocks"] = blocks;
        global["optimizers"] = optimizers;
        write_json(out_dir / "friedman.json", global);

        auto out = open_csv(out_dir / "wilcoxon_holm.csv");
        out << "method_a,method_b,W,median_diff,p_raw,p_holm\n";
        std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
        std::vector<stats::TestResult> tests;
        std::vector<double> raw;
        for (Eigen::Index a = 0; a < k; ++a) {
            for (Eigen::Index b = a + 1; b < k; ++b) {
                const Eigen::VectorXd ca = m.col(a), cb = m.col(b);
                tests.push_back(stats::wilcoxon_signed_rank(std::span<const double>(ca.data(), ca.size()),
                                                            std::span<const double>(cb.data(), cb.size())));
                raw.push_back(tests.back().p);
                pairs.emplace_back(a, b);
            }
        }
        const auto holm = stats::p_adjust_holm(raw);
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            out << optimizers[static_cast<std::size_t>(pairs[t].first)] << ','
                << optimizers[static_cast<std::size_t>(pairs[t].second)] << ',' << format_double(tests[t].statistic)
                << ',' << format_double(tests[t].extras.at("median_diff")) << ',' << format_double(raw[t]) << ','
                << format_double(holm[t]) << '\n';
        }
        log << "friedman: chi2=" << groups.friedman.statistic << " p=" << groups.friedman.p
            << " W=" << groups.friedman.extras.at("W") << " over " << blocks.size() << " families\n";
    } else {
        log << "friedman: skipped (needs >= 2 complete families and >= 2 optimizers)\n";
    }

    // Per-family tied ranks; blocks are seeds shared by every optimizer.
    auto out = open_csv(out_dir / "rank_places.csv");
    out << "family";
    for (const auto &o : optimizers) {
        out << ',' << o;
    }
    out << '\n';
    for (const auto &f : families) {
        std::map<std::string, std::map<std::uint64_t, double>> dist;
        for (const auto &r : records) {
            if (r.family == f && r.finite()) {
                dist[r.optimizer][r.seed] = (Eigen::Vector2d(r.e_ground, r.e_excited) - reference).norm();
            }
        }
        std::set<std::uint64_t> seeds;
        bool first = true;
        for (const auto &o : optimizers) {
            std::set<std::uint64_t> s;
            for (const auto &[seed, _] : dist[o]) {
                s.insert(seed);
            }
            if (first) {
                seeds = s;
                first = false;
            } else {
                std::set<std::uint64_t> both;
                std::set_intersection(seeds.begin(), seeds.end(), s.begin(), s.end(),
                                      std::inserter(both, both.begin()));
                seeds = both;
            }
        }
        out << f;
        if (seeds.size() < 2 || k < 2) {
            for (Eigen::Index o = 0; o < k; ++o) {
                out << ",NA";
            }
            out << '\n';
            log << "rank " << f << ": skipped (fewer than 2 shared seeds)\n";
            continue;
        }
        Eigen::MatrixXd m(static_cast<Eigen::Index>(seeds.size()), k);
        Eigen::Index row = 0;
        for (auto seed : seeds) {
            for (Eigen::Index o = 0; o < k; ++o) {
                m(row, o) = dist[optimizers[static_cast<std::size_t>(o)]][seed];
            }
            ++row;
        }
        const auto groups = stats::tied_rank_groups(m);
        for (auto p : groups.place) {
            out << ',' << p;
        }
        out << '\n';
    }
}

}  // namespace vqn::bench
