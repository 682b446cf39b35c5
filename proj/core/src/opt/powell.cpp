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

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "objective.hpp"

namespace vqn::opt {
namespace {

constexpr double kGolden = 1.618033988749895;
constexpr double kCGold = 0.3819660112501051;
constexpr double kLineTolerance = 1e-8;
constexpr std::size_t kMaxBracketProbes = 20;
constexpr std::size_t kMaxBrentProbes = 99;
constexpr double kCycleTolerance = 1e-10;

struct LinePoint {
    double alpha;
    double f;
};

// Minimizes phi(alpha) = f(x + alpha u) starting from phi(0) = f0.
// Returns the best point seen; never more than 119 probes.
LinePoint line_minimize(detail::Evaluator &ev, const Eigen::VectorXd &x, const Eigen::VectorXd &u, double f0) {
    LinePoint best{0.0, f0};
    std::size_t probes = 0;
    auto phi = [&](double alpha) {
        const double v = ev(Eigen::VectorXd(x + alpha * u));
        ++probes;
        if (v < best.f) {
            best = {alpha, v};
        }
        return v;
    };

    // Bracket a minimum: a < b < c (or reversed) with f(b) <= f(a), f(c).
    double a = 0.0, fa = f0;
    double b = 1.0, fb = phi(b);
    if (fb > fa) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = b + kGolden * (b - a);
    double fc = phi(c);
    while (fb > fc && probes < kMaxBracketProbes) {
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        c = b + kGolden * (b - a);
        fc = phi(c);
    }
    if (fb > fc) {
        return best;
    }

    // Brent's method on [lo, hi].
    double lo = std::min(a, c), hi = std::max(a, c);
    double xm = b, w = b, v = b;
    double fx = fb, fw = fb, fv = fb;
    double d = 0.0, e = 0.0;
    for (std::size_t it = 0; it < kMaxBrentProbes; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double tol1 = kLineTolerance * std::abs(xm) + 1e-12;
        const double tol2 = 2.0 * tol1;
        if (std::abs(xm - mid) <= tol2 - 0.5 * (hi - lo)) {
            break;
        }
        bool golden = true;
        if (std::abs(e) > tol1) {
            double r = (xm - w) * (fx - fv);
            double q = (xm - v) * (fx - fw);
            double p = (xm - v) * q - (xm - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) {
                p = -p;
            }
            q = std::abs(q);
            const double e_prev = e;
            if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (lo - xm) && p < q * (hi - xm)) {
                e = d;
                d = p / q;
                const double trial = xm + d;
                if (trial - lo < tol2 || hi - trial < tol2) {
                    d = mid >= xm ? tol1 : -tol1;
                }
                golden = false;
            }
        }
        if (golden) {
            e = (xm >= mid ? lo : hi) - xm;
            d = kCGold * e;
        }
        const double trial = std::abs(d) >= tol1 ? xm + d : xm + (d >= 0.0 ? tol1 : -tol1);
        const double ft = phi(trial);
        if (ft <= fx) {
            (trial >= xm ? lo : hi) = xm;
            v = w;
            fv = fw;
            w = xm;
            fw = fx;
            xm = trial;
            fx = ft;
        } else {
            (trial < xm ? lo : hi) = trial;
            if (ft <= fw || w == xm) {
                v = w;
                fv = fw;
                w = trial;
                fw = ft;
            } else if (ft <= fv || v == xm || v == w) {
                v = trial;
                fv = ft;
            }
        }
    }
    return best;
}

}  // namespace

OptResult powell_minimize(const CostFunction &cost, std::span<const double> theta0, const OptimizerSpec &spec) {
    spec.validate();
    detail::check_start(theta0);
    const std::size_t n = theta0.size();
    detail::Evaluator ev(cost, evaluation_budget(spec, n));

    return detail::run_guarded(ev, [&](std::size_t &iterations) -> detail::Outcome {
        std::vector<Eigen::VectorXd> dirs;
        for (std::size_t i = 0; i < n; ++i) {
            dirs.push_back(Eigen::VectorXd::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)));
        }
        Eigen::VectorXd x = detail::to_vector(theta0);
        double f = ev(x);
        for (iterations = 0; iterations < spec.maxiter;) {
            const Eigen::VectorXd x_start = x;
            const double f_start = f;
            double biggest_drop = 0.0;
            std::size_t biggest_idx = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const LinePoint lp = line_minimize(ev, x, dirs[i], f);
                if (f - lp.f > biggest_drop) {
                    biggest_drop = f - lp.f;
                    biggest_idx = i;
                }
                x += lp.alpha * dirs[i];
                f = lp.f;
            }
            ++iterations;
            if (f_start - f < kCycleTolerance) {
                return {true, "per-cycle improvement below tolerance"};
            }

            const Eigen::VectorXd shift = x - x_start;
            const double f_ext = ev(Eigen::VectorXd(x + shift));
            if (f_ext < f_start) {
                const double t = 2.0 * (f_start - 2.0 * f + f_ext) * std::pow(f_start - f - biggest_drop, 2) -
                                 biggest_drop * std::pow(f_start - f_ext, 2);
                if (t < 0.0) {
                    const LinePoint lp = line_minimize(ev, x, shift, f);
                    x += lp.alpha * shift;
                    f = lp.f;
                    dirs[biggest_idx] = dirs.back();
                    dirs.back() = shift;
                }
            }
        }
        return {false, "maxiter reached"};
    });
}

}  // namespace vqn::opt
