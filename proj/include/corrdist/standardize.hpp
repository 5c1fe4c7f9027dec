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

// Raw sample vectors and their centered-reduced representatives.
//
// A sample point x in R^D (D >= 2) that is not constant is mapped to
//
//     x* = (x - mean(x)) / stddev(x) = sqrt(D) (x - mean(x)) / |x - mean(x)|
//
// which has zero mean and sum of squares D, i.e. it lies on the sphere of
// radius sqrt(D) inside the hyperplane orthogonal to (1, ..., 1). The
// standard deviation is the population one (divide by D).

#ifndef CORRDIST_STANDARDIZE_HPP
#define CORRDIST_STANDARDIZE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corrdist/diagnostics.hpp"
#include "corrdist/error.hpp"

namespace corrdist {

/// Components with magnitude at or below this are skipped when choosing a sign.
inline constexpr double sign_significance = 1e-12;
/// Default relative radius of the numerical neighborhood of the constant line.
inline constexpr double default_eps_diag = 1e-12;
/// Tolerance used when validating the sphere invariants of a StandardizedPoint.
inline constexpr double sphere_tolerance = 1e-10;

/// A raw vector of D >= 2 finite components.
class SamplePoint {
public:
    explicit SamplePoint(std::vector<double> values) : values_(std::move(values)) {
        if (values_.size() < 2) {
            throw Error(ErrorKind::invalid_input,
                        "sample point needs at least 2 components, got " + std::to_string(values_.size()));
        }
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i])) {
                throw Error(ErrorKind::invalid_input, "component " + std::to_string(i) + " is not finite");
            }
        }
    }

    SamplePoint(std::initializer_list<double> values) : SamplePoint(std::vector<double>(values)) {}

    [[nodiscard]] std::size_t dim() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

    friend bool operator==(const SamplePoint&, const SamplePoint&) = default;

private:
    std::vector<double> values_;
};

/// A point on the sphere of radius sqrt(D) with zero component mean.
///
/// Instances can only be obtained through validated construction, so every
/// consumer may rely on |sum| <= 1e-10 D and |sum of squares - D| <= 1e-10 D.
class StandardizedPoint {
public:
    /// Validates the sphere invariants; throws ErrorKind::invalid_input otherwise.
    [[nodiscard]] static StandardizedPoint from_values(std::vector<double> values) {
        const std::size_t d = values.size();
        if (d < 2) {
            throw Error(ErrorKind::invalid_input, "standardized point needs at least 2 components");
        }
        double sum = 0.0;
        double squares = 0.0;
        for (double v : values) {
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::invalid_input, "standardized point has a non-finite component");
            }
            sum += v;
            squares += v * v;
        }
        const double dd = static_cast<double>(d);
        if (std::abs(sum) > sphere_tolerance * dd) {
            throw Error(ErrorKind::invalid_input, "standardized point does not have zero mean");
        }
        if (std::abs(squares - dd) > sphere_tolerance * dd) {
            throw Error(ErrorKind::invalid_input, "standardized point is not on the sphere of radius sqrt(D)");
        }
        return StandardizedPoint(std::move(values));
    }

    StandardizedPoint(std::initializer_list<double> values)
        : StandardizedPoint(from_values(std::vector<double>(values))) {}

    [[nodiscard]] std::size_t dim() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

    /// The antipodal point; exact, since negation is exact in floating point.
    [[nodiscard]] StandardizedPoint operator-() const {
        std::vector<double> flipped(values_.size());
        std::transform(values_.begin(), values_.end(), flipped.begin(), [](double v) { return -v; });
        return StandardizedPoint(std::move(flipped));
    }

    friend bool operator==(const StandardizedPoint&, const StandardizedPoint&) = default;

private:
    explicit StandardizedPoint(std::vector<double> values) : values_(std::move(values)) {}

    std::vector<double> values_;
};

[[nodiscard]] inline double mean(std::span<const double> values) noexcept {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

[[nodiscard]] inline double mean(const SamplePoint& p) noexcept { return mean(p.values()); }

namespace detail {

// |x - mean(x) 1|
inline double centered_norm(std::span<const double> values, double m) noexcept {
    double squares = 0.0;
    for (double v : values) squares += (v - m) * (v - m);
    return std::sqrt(squares);
}

inline double norm(std::span<const double> values) noexcept {
    double squares = 0.0;
    for (double v : values) squares += v * v;
    return std::sqrt(squares);
}

} // namespace detail

/// Population standard deviation, |x - mean 1| / sqrt(D). Zero for constant points.
[[nodiscard]] inline double stddev(const SamplePoint& p) noexcept {
    const auto values = p.values();
    return detail::centered_norm(values, mean(values)) / std::sqrt(static_cast<double>(values.size()));
}

/// True iff |p - mean(p) 1| <= eps * max(1, |p|).
[[nodiscard]] inline bool is_diagonal(const SamplePoint& p, double eps) noexcept {
    const auto values = p.values();
    const double deviation = detail::centered_norm(values, mean(values));
    return deviation <= eps * std::max(1.0, detail::norm(values));
}

struct StandardizeOptions {
    double eps_diag = default_eps_diag;
};

/// Centered-reduced transform. Throws ErrorKind::degenerate_input for points
/// within the eps_diag neighborhood of the constant line. For D = 2 every
/// result is +-(1, -1), so a warning is sent to `sink` if one is given.
[[nodiscard]] inline StandardizedPoint standardize(const SamplePoint& p, const StandardizeOptions& options = {},
                                                   DiagnosticSink* sink = nullptr) {
    if (is_diagonal(p, options.eps_diag)) {
        throw Error(ErrorKind::degenerate_input, "point is constant (all components equal), cannot standardize");
    }
    if (p.dim() == 2 && sink != nullptr) {
        sink->warn("D = 2: every standardized point is +-(1, -1), all correlation distances are 0");
    }
    const auto values = p.values();
    const double m = mean(values);
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] - m;
    // Second pass removes the rounding left in the first mean, which matters
    // when the offset is large compared to the spread.
    const double residual = mean(out);
    for (double& v : out) v -= residual;
    const double scale = std::sqrt(static_cast<double>(values.size())) / detail::norm(out);
    for (double& v : out) v *= scale;
    return StandardizedPoint::from_values(std::move(out));
}

/// Chooses between q and -q: the first component with |v| > 1e-12 is made positive.
[[nodiscard]] inline StandardizedPoint canonicalize(const StandardizedPoint& q) {
    for (double v : q.values()) {
        if (std::abs(v) > sign_significance) {
            return v > 0.0 ? q : -q;
        }
    }
    return q;
}

} // namespace corrdist

#endif // CORRDIST_STANDARDIZE_HPP
