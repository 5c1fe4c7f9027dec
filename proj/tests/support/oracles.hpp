// Copyright 2026 The corrdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference computations that do not go through the library code paths they
// are used to check.

#ifndef CORRDIST_TESTS_ORACLES_HPP
#define CORRDIST_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "corrdist/matrix.hpp"

namespace corrdist::testing {

/// Textbook Pearson coefficient on raw samples.
inline double pearson_raw(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

/// Eigenvalues in descending order from Eigen's self-adjoint solver.
inline std::vector<double> reference_eigenvalues(const SquareMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    return out;
}

struct GridMinimum {
    double objective;
    std::vector<double> argmin; // on the sphere of radius sqrt(3)
};

/// Exhaustive search of F over the sphere of radius sqrt(3) in R^3, on a
/// polar/azimuth grid with the given step in degrees. `points` are rows of 3
/// already standardized coordinates. Both g and -g are visited since the
/// azimuth covers the full circle and the polar angle spans [0, 180].
inline GridMinimum grid_search_objective(const std::vector<std::vector<double>>& points, double step_deg) {
    const double radius = std::sqrt(3.0);
    const double n = static_cast<double>(points.size());
    const double deg = std::numbers::pi / 180.0;
    const int polar_steps = static_cast<int>(std::lround(180.0 / step_deg));
    const int azimuth_steps = static_cast<int>(std::lround(360.0 / step_deg));
    GridMinimum best{2.0, {}};
    for (int i = 0; i <= polar_steps; ++i) {
        const double theta = i * step_deg * deg;
        for (int j = 0; j < azimuth_steps; ++j) {
            const double phi = j * step_deg * deg;
            const double g[3] = {radius * std::sin(theta) * std::cos(phi), radius * std::sin(theta) * std::sin(phi),
                                 radius * std::cos(theta)};
            double sum = 0.0;
            for (const auto& x : points) {
                const double c = g[0] * x[0] + g[1] * x[1] + g[2] * x[2];
                sum += c * c;
            }
            const double f = 1.0 - sum / (n * 9.0);
            if (f < best.objective) best = {f, {g[0], g[1], g[2]}};
            if (i == 0 || i == polar_steps) break; // poles: azimuth is irrelevant
        }
    }
    return best;
}

/// Hubert-Arabie adjusted Rand index.
inline double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    std::map<std::pair<std::size_t, std::size_t>, double> table;
    std::map<std::size_t, double> rows, cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        table[{a[i], b[i]}] += 1.0;
        rows[a[i]] += 1.0;
        cols[b[i]] += 1.0;
    }
    auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };
    double index = 0.0, sum_rows = 0.0, sum_cols = 0.0;
    for (const auto& [key, count] : table) index += choose2(count);
    for (const auto& [key, count] : rows) sum_rows += choose2(count);
    for (const auto& [key, count] : cols) sum_cols += choose2(count);
    const double expected = sum_rows * sum_cols / choose2(static_cast<double>(a.size()));
    const double max_index = 0.5 * (sum_rows + sum_cols);
    if (max_index == expected) return 1.0;
    return (index - expected) / (max_index - expected);
}

} // namespace corrdist::testing

#endif // CORRDIST_TESTS_ORACLES_HPP
