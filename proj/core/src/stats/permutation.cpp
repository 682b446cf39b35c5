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

#include "vqn/stats/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "vqn/errors.hpp"
#include "vqn/stats/homogeneity.hpp"
#include "vqn/stats/p_adjust.hpp"

namespace vqn::stats {
namespace {

struct Compact {
    std::vector<std::size_t> codes;
    std::vector<std::size_t> sizes;
};

Compact compact_codes(std::span<const std::size_t> codes, Eigen::Index rows) {
    if (static_cast<Eigen::Index>(codes.size()) != rows) {
        throw UsageError("label count does not match the number of observations");
    }
    std::vector<std::size_t> remap;
    Compact c;
    for (std::size_t code : codes) {
        if (code >= remap.size()) {
            remap.resize(code + 1, std::numeric_limits<std::size_t>::max());
        }
        if (remap[code] == std::numeric_limits<std::size_t>::max()) {
            remap[code] = c.sizes.size();
            c.sizes.push_back(0);
        }
        c.codes.push_back(remap[code]);
        ++c.sizes[remap[code]];
    }
    if (c.sizes.size() < 2) {
        throw UsageError("permutation tests need at least 2 groups");
    }
    for (std::size_t s : c.sizes) {
        if (s < 2) {
            throw DegenerateSampleError("permutation tests need n_i >= 2 in every group");
        }
    }
    return c;
}

bool at_least(double f_perm, double f_obs) {
    if (std::isinf(f_obs)) {
        return std::isinf(f_perm);
    }
    return f_perm >= f_obs - 1e-9 * std::max(1.0, std::abs(f_obs));
}

// Number of distinct label assignments, saturating just above `cap`.
double assignment_count(const std::vector<std::size_t> &sizes, double cap) {
    double total = 1.0;
    std::size_t placed = 0;
    for (std::size_t s : sizes) {
        for (std::size_t i = 1; i <= s; ++i) {
            ++placed;
            total = total * static_cast<double>(placed) / static_cast<double>(i);
            if (total > cap * 4.0 + 1e6) {
                return std::numeric_limits<double>::infinity();
            }
        }
    }
    return std::round(total);
}

struct PermutationOutcome {
    double p;
    std::size_t n_perm;
    bool exhaustive;
};

template <class Statistic>
PermutationOutcome permutation_p(const std::vector<std::size_t> &codes, const std::vector<std::size_t> &sizes,
                                 double f_obs, Statistic &&stat, Rng &rng, std::size_t n_perm) {
    const double total = assignment_count(sizes, static_cast<double>(n_perm));
    if (total <= static_cast<double>(n_perm) + 1.0) {
        std::vector<std::size_t> perm = codes;
        std::sort(perm.begin(), perm.end());
        std::size_t hits = 0, seen = 0;
        do {
            ++seen;
            hits += at_least(stat(perm), f_obs) ? 1 : 0;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return {static_cast<double>(hits) / static_cast<double>(seen), seen - 1, true};
    }
    std::vector<std::size_t> perm = codes;
    std::size_t hits = 0;
    for (std::size_t t = 0; t < n_perm; ++t) {
        for (std::size_t i = perm.size() - 1; i > 0; --i) {
            std::uniform_int_distribution<std::size_t> pick(0, i);
            std::swap(perm[i], perm[pick(rng)]);
        }
        hits += at_least(stat(perm), f_obs) ? 1 : 0;
    }
    return {static_cast<double>(hits + 1) / static_cast<double>(n_perm + 1), n_perm, false};
}

struct SumsOfSquares {
    double within;
    double total;
};

double pseudo_f(const SumsOfSquares &ss, double k, double n) {
    const double between = ss.total - ss.within;
    if (between <= 1e-14 * ss.total || ss.total <= 0.0) {
        return 0.0;
    }
    if (ss.within <= 1e-14 * ss.total) {
        return std::numeric_limits<double>::infinity();
    }
    return (between / (k - 1.0)) / (ss.within / (n - k));
}

void attach(TestResult &r, const PermutationOutcome &o) {
    r.p = o.p;
    r.extras["n_perm"] = static_cast<double>(o.n_perm);
    r.extras["exhaustive"] = o.exhaustive ? 1.0 : 0.0;
}

}  // namespace

TestResult permanova(const Observations &x, std::span<const std::size_t> codes, Rng &rng, PermutationOptions opts) {
    const Compact c = compact_codes(codes, x.rows());
    const auto n = x.rows();
    Eigen::MatrixXd d2(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            d2(i, j) = (x.row(i) - x.row(j)).squaredNorm();
        }
    }
    double ss_total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            ss_total += d2(i, j);
        }
    }
    ss_total /= static_cast<double>(n);

    const double k = static_cast<double>(c.sizes.size());
    const double nd = static_cast<double>(n);
    auto within = [&](const std::vector<std::size_t> &lab) {
        std::vector<double> acc(c.sizes.size(), 0.0);
        for (Eigen::Index i = 0; i < n; ++i) {
            const std::size_t gi = lab[static_cast<std::size_t>(i)];
            for (Eigen::Index j = i + 1; j < n; ++j) {
                if (lab[static_cast<std::size_t>(j)] == gi) {
                    acc[gi] += d2(i, j);
                }
            }
        }
        double ss = 0.0;
        for (std::size_t g = 0; g < acc.size(); ++g) {
            ss += acc[g] / static_cast<double>(c.sizes[g]);
        }
        return ss;
    };
    auto stat = [&](const std::vector<std::size_t> &lab) { return pseudo_f({within(lab), ss_total}, k, nd); };

    const double ss_within = within(c.codes);
    TestResult r;
    r.test = "permanova";
    r.statistic = pseudo_f({ss_within, ss_total}, k, nd);
    r.df = {k - 1.0, nd - k};
    attach(r, permutation_p(c.codes, c.sizes, r.statistic, stat, rng, opts.n_perm));
    r.extras["ss_total"] = ss_total;
    r.extras["ss_within"] = ss_within;
    r.extras["ss_between"] = ss_total - ss_within;
    r.extras["R2"] = ss_total > 0.0 ? std::clamp((ss_total - ss_within) / ss_total, 0.0, 1.0) : 0.0;
    return r;
}

TestResult permdisp(const Observations &x, std::span<const std::size_t> codes, Rng &rng, PermutationOptions opts) {
    const Compact c = compact_codes(codes, x.rows());
    const std::size_t k = c.sizes.size();
    Eigen::MatrixXd centroids = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), x.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        centroids.row(static_cast<Eigen::Index>(c.codes[static_cast<std::size_t>(i)])) += x.row(i);
    }
    for (std::size_t g = 0; g < k; ++g) {
        centroids.row(static_cast<Eigen::Index>(g)) /= static_cast<double>(c.sizes[g]);
    }
    std::vector<double> z(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        z[static_cast<std::size_t>(i)] =
            (x.row(i) - centroids.row(static_cast<Eigen::Index>(c.codes[static_cast<std::size_t>(i)]))).norm();
    }

    auto stat = [&](const std::vector<std::size_t> &lab) {
        std::vector<std::vector<double>> groups(k);
        for (std::size_t i = 0; i < z.size(); ++i) {
            groups[lab[i]].push_back(z[i]);
        }
        return one_way_anova(groups).statistic;
    };

    std::vector<std::vector<double>> groups(k);
    for (std::size_t i = 0; i < z.size(); ++i) {
        groups[c.codes[i]].push_back(z[i]);
    }
    const TestResult anova = one_way_anova(groups);
    TestResult r;
    r.test = "permdisp";
    r.statistic = anova.statistic;
    r.df = anova.df;
    r.flags = anova.flags;
    attach(r, permutation_p(c.codes, c.sizes, r.statistic, stat, rng, opts.n_perm));
    return r;
}

PairwiseMatrix pairwise_posthoc(const Observations &x, const GroupCodes &groups, PairwiseTest test, Adjust adjust,
                                Rng &rng, PermutationOptions opts) {
    const std::size_t g = groups.names.size();
    if (g < 2) {
        throw UsageError("pairwise post-hoc needs at least 2 groups");
    }
    PairwiseMatrix out;
    out.labels = groups.names;
    out.method = std::string(test == PairwiseTest::permanova ? "permanova" : "permdisp") + "/" +
                 (adjust == Adjust::bh ? "bh" : adjust == Adjust::holm ? "holm" : "none");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.p_raw = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(g), nan);
    out.p_adjusted = out.p_raw;

    std::vector<std::pair<std::size_t, std::size_t>> valid;
    std::vector<double> raw;
    for (std::size_t a = 0; a < g; ++a) {
        for (std::size_t b = a + 1; b < g; ++b) {
            std::vector<Eigen::Index> rows;
            std::vector<std::size_t> sub_codes;
            for (std::size_t i = 0; i < groups.codes.size(); ++i) {
                if (groups.codes[i] == a || groups.codes[i] == b) {
                    rows.push_back(static_cast<Eigen::Index>(i));
                    sub_codes.push_back(groups.codes[i] == a ? 0 : 1);
                }
            }
            Observations sub(static_cast<Eigen::Index>(rows.size()), x.cols());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                sub.row(static_cast<Eigen::Index>(r)) = x.row(rows[r]);
            }
            try {
                const TestResult t = test == PairwiseTest::permanova ? permanova(sub, sub_codes, rng, opts)
                                                                     : permdisp(sub, sub_codes, rng, opts);
                valid.emplace_back(a, b);
                raw.push_back(t.p);
            } catch (const std::exception &e) {
                out.diagnostics.push_back(groups.names[a] + " vs " + groups.names[b] + ": " + e.what());
            }
        }
    }
    std::vector<double> adj = raw;
    if (adjust == Adjust::holm) {
        adj = p_adjust_holm(raw);
    } else if (adjust == Adjust::bh) {
        adj = p_adjust_bh(raw);
    }
    for (std::size_t i = 0; i < valid.size(); ++i) {
        const auto a = static_cast<Eigen::Index>(valid[i].first);
        const auto b = static_cast<Eigen::Index>(valid[i].second);
        out.p_raw(a, b) = out.p_raw(b, a) = raw[i];
        out.p_adjusted(a, b) = out.p_adjusted(b, a) = adj[i];
    }
    return out;
}

}  // namespace vqn::stats
