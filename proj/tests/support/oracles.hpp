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

#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vqn::oracle {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;

inline CMat pauli2(char c) {
    CMat m(2, 2);
    switch (c) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

inline CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Leftmost letter is the most significant tensor factor.
inline CMat pauli_string(const std::string &s) {
    CMat m = CMat::Identity(1, 1);
    for (char c : s) {
        m = kron(m, pauli2(c));
    }
    return m;
}

inline CMat dense_hamiltonian(const std::vector<std::pair<double, std::string>> &terms) {
    const auto dim = Eigen::Index{1} << terms.front().second.size();
    CMat h = CMat::Zero(dim, dim);
    for (const auto &[c, p] : terms) {
        h += c * pauli_string(p);
    }
    return h;
}

/// Cyclic Jacobi on a real symmetric matrix; eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a) {
    const auto n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                off += a(p, q) * a(p, q);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        ev[static_cast<std::size_t>(i)] = a(i, i);
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Hermitian H = A + iB has eigenvalues of [[A, -B], [B, A]], each doubled.
inline std::vector<double> hermitian_eigenvalues(const CMat &h) {
    const auto n = h.rows();
    Eigen::MatrixXd big(2 * n, 2 * n);
    big << h.real(), -h.imag(), h.imag(), h.real();
    const auto all = jacobi_eigenvalues(big);
    std::vector<double> out;
    for (std::size_t i = 0; i < all.size(); i += 2) {
        out.push_back(0.5 * (all[i] + all[i + 1]));
    }
    return out;
}

/// Random full-rank density matrix G G^dagger / Tr.
template <class R>
CMat random_density(Eigen::Index dim, R &rng) {
    std::normal_distribution<double> n01;
    CMat g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            g(i, j) = cd(n01(rng), n01(rng));
        }
    }
    CMat rho = g * g.adjoint();
    return rho / rho.trace();
}

/// One-way ANOVA F from scratch (centroid sums of squares).
inline double anova_f(const std::vector<double> &z, const std::vector<int> &labels, int groups) {
    std::vector<double> sum(groups, 0.0);
    std::vector<int> cnt(groups, 0);
    double grand = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        sum[labels[i]] += z[i];
        cnt[labels[i]] += 1;
        grand += z[i];
    }
    grand /= static_cast<double>(z.size());
    double ssb = 0.0, ssw = 0.0;
    for (int g = 0; g < groups; ++g) {
        const double m = sum[g] / cnt[g];
        ssb += cnt[g] * (m - grand) * (m - grand);
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double m = sum[labels[i]] / cnt[labels[i]];
        ssw += (z[i] - m) * (z[i] - m);
    }
    const double sst = ssb + ssw;
    if (sst <= 0.0 || ssb <= 1e-14 * sst) {
        return 0.0;
    }
    if (ssw <= 1e-14 * sst) {
        return INFINITY;
    }
    return (ssb / (groups - 1)) / (ssw / (static_cast<double>(z.size()) - groups));
}

/// Multivariate pseudo-F from centroid sums of squares.
inline double centroid_pseudo_f(const Eigen::MatrixXd &x, const std::vector<int> &labels, int groups) {
    const Eigen::RowVectorXd grand = x.colwise().mean();
    double sst = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        sst += (x.row(i) - grand).squaredNorm();
    }
    Eigen::MatrixXd cen = Eigen::MatrixXd::Zero(groups, x.cols());
    std::vector<int> cnt(groups, 0);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        cen.row(labels[i]) += x.row(i);
        cnt[labels[i]] += 1;
    }
    for (int g = 0; g < groups; ++g) {
        cen.row(g) /= cnt[g];
    }
    double ssw = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        ssw += (x.row(i) - cen.row(labels[i])).squaredNorm();
    }
    const double ssb = sst - ssw;
    if (sst <= 0.0 || ssb <= 1e-14 * sst) {
        return 0.0;
    }
    if (ssw <= 1e-14 * sst) {
        return INFINITY;
    }
    return (ssb / (groups - 1)) / (ssw / (static_cast<double>(x.rows()) - groups));
}

inline bool at_least(double f, double f_obs) {
    if (std::isinf(f_obs)) {
        return std::isinf(f);
    }
    return f >= f_obs - 1e-9 * std::max(1.0, std::abs(f_obs));
}

/// p over all N! orderings of the observed labels.
template <class Stat>
double exhaustive_p(const std::vector<int> &labels, Stat &&stat) {
    std::vector<int> idx(labels.size());
    std::iota(idx.begin(), idx.end(), 0);
    const double f_obs = stat(labels);
    std::size_t hits = 0, total = 0;
    std::vector<int> perm(labels.size());
    do {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            perm[i] = labels[static_cast<std::size_t>(idx[i])];
        }
        ++total;
        hits += at_least(stat(perm), f_obs) ? 1 : 0;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return static_cast<double>(hits) / static_cast<double>(total);
}

/// Two-sided exact Wilcoxon p by enumerating all 2^n sign patterns of the
/// given (possibly tied) ranks.
inline double wilcoxon_enumerated_p(const std::vector<double> &ranks, double w) {
    const std::size_t n = ranks.size();
    std::size_t hits = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        double wp = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) {
                wp += ranks[i];
            }
        }
        hits += wp <= w + 1e-9 ? 1 : 0;
    }
    return std::min(1.0, 2.0 * static_cast<double>(hits) / static_cast<double>(std::size_t{1} << n));
}

}  // namespace vqn::oracle
