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

#include "vqn/stats/homogeneity.hpp"

#include <cmath>
#include <limits>

#include "vqn/errors.hpp"
#include "vqn/stats/descriptive.hpp"
#include "vqn/stats/distributions.hpp"

namespace vqn::stats {

TestResult box_m_test(std::span<const Observations> groups) {
    const std::size_t g = groups.size();
    if (g < 2) {
        throw UsageError("box's M needs at least 2 groups");
    }
    const auto p = groups.front().cols();
    double n_total = 0.0;
    double inv_sum = 0.0;
    double log_det_sum = 0.0;
    Eigen::MatrixXd pooled = Eigen::MatrixXd::Zero(p, p);
    for (const auto &x : groups) {
        if (x.cols() != p) {
            throw UsageError("box's M groups differ in dimension");
        }
        if (x.rows() < p + 1) {
            throw DegenerateSampleError("box's M needs n_i >= p + 1 in every group");
        }
        const Eigen::MatrixXd s = covariance(x);
        const double det = s.determinant();
        if (!(det > 0.0) || Eigen::FullPivLU<Eigen::MatrixXd>(s).rcond() < 1e-12) {
            throw DegenerateSampleError("box's M: singular group covariance");
        }
        const double dof = static_cast<double>(x.rows() - 1);
        pooled += dof * s;
        log_det_sum += dof * std::log(det);
        inv_sum += 1.0 / dof;
        n_total += static_cast<double>(x.rows());
    }
    const double gd = static_cast<double>(g);
    const double pd = static_cast<double>(p);
    pooled /= n_total - gd;
    const double m = (n_total - gd) * std::log(pooled.determinant()) - log_det_sum;
    const double c = (inv_sum - 1.0 / (n_total - gd)) * (2.0 * pd * pd + 3.0 * pd - 1.0) /
                     (6.0 * (pd + 1.0) * (gd - 1.0));

    TestResult r;
    r.test = "box_m";
    r.statistic = m * (1.0 - c);
    r.df = {(gd - 1.0) * pd * (pd + 1.0) / 2.0};
    r.p = chi2_sf(r.statistic, r.df[0]);
    r.extras["M"] = m;
    r.extras["c"] = c;
    return r;
}

TestResult one_way_anova(std::span<const std::vector<double>> groups) {
    if (groups.size() < 2) {
        throw UsageError("one-way ANOVA needs at least 2 groups");
    }
    double n_total = 0.0;
    double grand = 0.0;
    for (const auto &v : groups) {
        if (v.empty()) {
            throw DegenerateSampleError("one-way ANOVA: empty group");
        }
        for (double x : v) {
            grand += x;
        }
        n_total += static_cast<double>(v.size());
    }
    grand /= n_total;
    double ssb = 0.0, ssw = 0.0;
    for (const auto &v : groups) {
        const double m = mean(v);
        ssb += static_cast<double>(v.size()) * (m - grand) * (m - grand);
        for (double x : v) {
            ssw += (x - m) * (x - m);
        }
    }
    const double k = static_cast<double>(groups.size());
    TestResult r;
    r.test = "anova";
    r.df = {k - 1.0, n_total - k};
    const double sst = ssb + ssw;
    if (sst <= 0.0 || ssb <= 1e-14 * sst) {
        r.statistic = 0.0;
        r.p = 1.0;
        if (sst <= 0.0) {
            r.flags.push_back("constant");
        }
    } else if (ssw <= 1e-14 * sst || !(r.df[1] > 0.0)) {
        r.statistic = std::numeric_limits<double>::infinity();
        r.p = 0.0;
        r.flags.push_back("zero_within_variance");
    } else {
        r.statistic = (ssb / r.df[0]) / (ssw / r.df[1]);
        r.p = f_sf(r.statistic, r.df[0], r.df[1]);
    }
    r.extras["ss_between"] = ssb;
    r.extras["ss_within"] = ssw;
    return r;
}

TestResult levene_like_test(std::span<const std::vector<double>> groups, Center center) {
    std::vector<std::vector<double>> z;
    z.reserve(groups.size());
    for (const auto &v : groups) {
        if (v.size() < 2) {
            throw DegenerateSampleError("levene-type test needs n_i >= 2 in every group");
        }
        const double c = center == Center::mean ? mean(v) : median(v);
        std::vector<double> zi;
        zi.reserve(v.size());
        for (double x : v) {
            zi.push_back(std::abs(x - c));
        }
        z.push_back(std::move(zi));
    }
    TestResult r = one_way_anova(z);
    r.test = center == Center::mean ? "levene" : "brown_forsythe";
    return r;
}

std::vector<TestResult> levene_like_by_column(std::span<const Observations> groups, Center center) {
    if (groups.empty()) {
        throw UsageError("levene-type test needs groups");
    }
    std::vector<TestResult> out;
    for (Eigen::Index col = 0; col < groups.front().cols(); ++col) {
        std::vector<std::vector<double>> values;
        for (const auto &x : groups) {
            values.emplace_back(x.col(col).data(), x.col(col).data() + x.rows());
        }
        out.push_back(levene_like_test(values, center));
    }
    return out;
}

}  // namespace vqn::stats
