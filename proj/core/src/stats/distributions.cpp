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

#include "vqn/stats/distributions.hpp"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>

namespace vqn::stats {

double chi2_sf(double x, double df) {
    if (std::isinf(x)) {
        return 0.0;
    }
    if (x <= 0.0) {
        return 1.0;
    }
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared_distribution<double>(df), x));
}

double f_sf(double x, double df1, double df2) {
    if (std::isinf(x)) {
        return 0.0;
    }
    if (x <= 0.0) {
        return 1.0;
    }
    return boost::math::cdf(boost::math::complement(boost::math::fisher_f_distribution<double>(df1, df2), x));
}

double normal_sf(double z) {
    if (std::isinf(z)) {
        return z > 0 ? 0.0 : 1.0;
    }
    return boost::math::cdf(boost::math::complement(boost::math::normal_distribution<double>(), z));
}

double normal_two_sided(double z) {
    return std::min(1.0, 2.0 * normal_sf(std::abs(z)));
}

}  // namespace vqn::stats
