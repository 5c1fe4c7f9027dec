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

// Correlation distance d(x, y) = sqrt(1 - corr(x, y)^2) on standardized points.
//
// With x, y standardized, corr(x, y) = (x . y) / D and d(x, y) = sin(angle),
// the angle between x and y. d is a pseudometric: d(x, -x) = 0.

#ifndef CORRDIST_METRIC_HPP
#define CORRDIST_METRIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "corrdist/error.hpp"
#include "corrdist/standardize.hpp"

namespace corrdist {

[[nodiscard]] inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

/// Pearson correlation, clamped to [-1, 1].
[[nodiscard]] inline double correlation(const StandardizedPoint& x, const StandardizedPoint& y) {
    detail::require_same_dimension(x.dim(), y.dim());
    const double c = dot(x.values(), y.values()) / static_cast<double>(x.dim());
    return std::clamp(c, -1.0, 1.0);
}

/// sqrt(1 - corr^2), evaluated as |x - y| |x + y| / (2D). For points on the
/// sphere the two agree, but this form keeps full relative accuracy near
/// corr = +-1, where 1 - corr^2 cancels (d(x, x) is exactly 0).
[[nodiscard]] inline double distance(const StandardizedPoint& x, const StandardizedPoint& y) {
    detail::require_same_dimension(x.dim(), y.dim());
    double minus = 0.0;
    double plus = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        minus += (x[i] - y[i]) * (x[i] - y[i]);
        plus += (x[i] + y[i]) * (x[i] + y[i]);
    }
    const double d = std::sqrt(minus) * std::sqrt(plus) / (2.0 * static_cast<double>(x.dim()));
    return std::min(d, 1.0);
}

/// Angle between x and y in [0, pi], i.e. acos(corr); distance(x, y) == sin(angle(x, y)).
[[nodiscard]] inline double angle(const StandardizedPoint& x, const StandardizedPoint& y) {
    detail::require_same_dimension(x.dim(), y.dim());
    double minus = 0.0;
    double plus = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        minus += (x[i] - y[i]) * (x[i] - y[i]);
        plus += (x[i] + y[i]) * (x[i] + y[i]);
    }
    return 2.0 * std::atan2(std::sqrt(minus), std::sqrt(plus));
}

/// Dense symmetric N x N matrix of pairwise distances, zero diagonal.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return std::span<const double>(entries_).subspan(i * n_, n_);
    }

    // Writes both (i, j) and (j, i).
    void set_pair(std::size_t i, std::size_t j, double value) noexcept {
        entries_[i * n_ + j] = value;
        entries_[j * n_ + i] = value;
    }

private:
    std::size_t n_;
    std::vector<double> entries_;
};

[[nodiscard]] inline DistanceMatrix distance_matrix(std::span<const StandardizedPoint> points) {
    if (points.empty()) {
        throw Error(ErrorKind::empty_input, "distance matrix of zero points");
    }
    const std::size_t d = points.front().dim();
    for (const auto& p : points) detail::require_same_dimension(d, p.dim());

    DistanceMatrix out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            out.set_pair(i, j, distance(points[i], points[j]));
        }
    }
    return out;
}

} // namespace corrdist

#endif // CORRDIST_METRIC_HPP
