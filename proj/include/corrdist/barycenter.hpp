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

// Center of mass of standardized points under the correlation distance.
//
// The center g minimizes the mean squared distance
//
//     F(g) = (1/N) sum_j d(g, x_j)^2 = 1 - 1/(N D^2) sum_j (g . x_j)^2
//
// subject to H(g) = 1 - (g . g)/D = 0. The Lagrange conditions reduce to
// M g = lambda g with the scatter matrix
//
//     m_ik = 1/(N D) sum_j x_jk x_ji,
//
// and on the constraint sphere F(g) = 1 - g^T M g / D, so for an eigenvector
// F = 1 - lambda. The minimizer is therefore sqrt(D) times the unit
// eigenvector of the largest eigenvalue.

#ifndef CORRDIST_BARYCENTER_HPP
#define CORRDIST_BARYCENTER_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "corrdist/eigen_symmetric.hpp"
#include "corrdist/error.hpp"
#include "corrdist/matrix.hpp"
#include "corrdist/metric.hpp"
#include "corrdist/standardize.hpp"

namespace corrdist {

/// Relative gap below which the top eigenvalue counts as repeated.
inline constexpr double degenerate_eigenvalue_tolerance = 1e-9;

/// The D x D matrix M together with the number of points it was built from.
/// Symmetric (exactly), trace 1, positive semidefinite, M 1 = 0.
struct ScatterMatrix {
    SquareMatrix matrix;
    std::size_t count = 0;

    [[nodiscard]] std::size_t dim() const noexcept { return matrix.dim(); }
    [[nodiscard]] double operator()(std::size_t i, std::size_t k) const noexcept { return matrix(i, k); }
};

struct Barycenter {
    StandardizedPoint point; // norm sqrt(D), canonical sign
    double eigenvalue;       // largest eigenvalue of M
    double objective;        // F(point)
    bool degenerate;         // top eigenvalue repeated; the minimizer is not unique up to sign
};

namespace detail {

inline std::size_t common_dimension(std::span<const StandardizedPoint> points) {
    if (points.empty()) {
        throw Error(ErrorKind::empty_input, "no points");
    }
    const std::size_t d = points.front().dim();
    for (const auto& p : points) require_same_dimension(d, p.dim());
    return d;
}

} // namespace detail

/// F(g) for any g with |g|^2 = D; g need not be centered.
[[nodiscard]] inline double objective_F(std::span<const double> g, std::span<const StandardizedPoint> points) {
    const std::size_t d = detail::common_dimension(points);
    detail::require_same_dimension(d, g.size());
    double sum = 0.0;
    for (const auto& x : points) {
        const double c = dot(g, x.values());
        sum += c * c;
    }
    const double dd = static_cast<double>(d);
    return 1.0 - sum / (static_cast<double>(points.size()) * dd * dd);
}

[[nodiscard]] inline double objective_F(const StandardizedPoint& g, std::span<const StandardizedPoint> points) {
    return objective_F(g.values(), points);
}

/// H(g) = 1 - (g . g)/D; zero on the sphere of radius sqrt(D).
[[nodiscard]] inline double constraint_H(std::span<const double> g) noexcept {
    return 1.0 - dot(g, g) / static_cast<double>(g.size());
}

[[nodiscard]] inline ScatterMatrix build_scatter(std::span<const StandardizedPoint> points) {
    const std::size_t d = detail::common_dimension(points);
    const double scale = 1.0 / (static_cast<double>(points.size()) * static_cast<double>(d));
    ScatterMatrix out{SquareMatrix(d), points.size()};
    // Upper triangle accumulated in input order, then mirrored.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i; k < d; ++k) {
            double sum = 0.0;
            for (const auto& x : points) sum += x[i] * x[k];
            out.matrix(i, k) = sum * scale;
            out.matrix(k, i) = out.matrix(i, k);
        }
    }
    return out;
}

[[nodiscard]] inline EigenDecomposition eigen_symmetric(const ScatterMatrix& m, const JacobiOptions& options = {}) {
    return eigen_symmetric(m.matrix, options);
}

/// Throws EmptyInput, DimensionMismatch, or a propagated ConvergenceFailure.
[[nodiscard]] inline Barycenter center_of_mass(std::span<const StandardizedPoint> points,
                                               const JacobiOptions& options = {}) {
    const std::size_t d = detail::common_dimension(points);
    const auto eig = eigen_symmetric(build_scatter(points), options);

    const double root_d = std::sqrt(static_cast<double>(d));
    const auto& top = eig.eigenvectors.front();
    std::vector<double> g(d);
    double norm = 0.0;
    for (double v : top) norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) g[i] = top[i] * (root_d / norm);

    const double lambda_max = eig.eigenvalues.front();
    const bool degenerate =
        eig.eigenvalues.size() > 1 && eig.eigenvalues[1] >= lambda_max * (1.0 - degenerate_eigenvalue_tolerance);

    auto point = canonicalize(StandardizedPoint::from_values(std::move(g)));
    const double objective = objective_F(point, points);
    return Barycenter{std::move(point), lambda_max, objective, degenerate};
}

} // namespace corrdist

#endif // CORRDIST_BARYCENTER_HPP
