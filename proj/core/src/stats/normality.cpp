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

#include "vqn/stats/normality.hpp"

#include <cmath>

#include "vqn/errors.hpp"
#include "vqn/stats/descriptive.hpp"
#include "vqn/stats/distributions.hpp"

namespace vqn::stats {

MardiaResult mardia_test(const Observations &x) {
    const auto n = x.rows();
    const auto p = x.cols();
    if (p < 1 || n < p + 2) {
        throw DegenerateSampleError("mardia test needs n >= p + 2 observations (n=" + std::to_string(n) + ")");
    }
    const Eigen::MatrixXd s = covariance(x);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
    if (!lu.isInvertible() || lu.rcond() < 1e-12) {
        throw DegenerateSampleError("mardia test: sample covariance is singular");
    }
    const Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
    const Eigen::MatrixXd g = centered * lu.solve(centered.transpose());

    const double nd = static_cast<double>(n);
    const double pd = static_cast<double>(p);
    const double b1 = g.array().cube().sum() / (nd * nd);
    const double b2 = g.diagonal().array().square().sum() / nd;

    MardiaResult r;
    r.skewness.test = "mardia_skewness";
    r.skewness.statistic = nd * b1 / 6.0;
    r.skewness.df = {pd * (pd + 1.0) * (pd + 2.0) / 6.0};
    r.skewness.p = chi2_sf(r.skewness.statistic, r.skewness.df[0]);
    r.skewness.extras["b1"] = b1;

    r.kurtosis.test = "mardia_kurtosis";
    r.kurtosis.statistic = (b2 - pd * (pd + 2.0)) / std::sqrt(8.0 * pd * (pd + 2.0) / nd);
    r.kurtosis.p = normal_two_sided(r.kurtosis.statistic);
    r.kurtosis.extras["b2"] = b2;
    return r;
}

}  // namespace vqn::stats
