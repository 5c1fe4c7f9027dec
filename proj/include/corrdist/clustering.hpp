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

// Lloyd iteration under the correlation distance. Points that are
// anti-correlated land in the same cluster, since d(x, -x) = 0; the centroid
// update is the eigenvector barycenter of each cluster.

#ifndef CORRDIST_CLUSTERING_HPP
#define CORRDIST_CLUSTERING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corrdist/barycenter.hpp"
#include "corrdist/error.hpp"
#include "corrdist/metric.hpp"
#include "corrdist/random.hpp"
#include "corrdist/standardize.hpp"

namespace corrdist {

enum class InitMethod { farthest_point, random_distinct };

struct ClusteringConfig {
    std::size_t k = 2;
    int max_iters = 100;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    InitMethod init = InitMethod::farthest_point;
};

struct ClusterModel {
    std::vector<StandardizedPoint> centers;
    std::vector<std::size_t> assignments;
    double inertia = 0.0; // (1/N) sum_j d(center[a_j], x_j)^2
    int iterations_run = 0;
    bool converged = false;
    // Inertia of the initial assignment, then one entry per iteration.
    std::vector<double> inertia_history;
};

namespace detail {

inline void validate_config(std::span<const StandardizedPoint> points, const ClusteringConfig& cfg) {
    if (points.empty()) throw Error(ErrorKind::empty_input, "no points to cluster");
    if (cfg.k == 0) throw Error(ErrorKind::invalid_input, "k must be at least 1");
    if (cfg.k > points.size()) {
        throw Error(ErrorKind::too_few_points,
                    "k = " + std::to_string(cfg.k) + " exceeds the number of points " + std::to_string(points.size()));
    }
    if (cfg.max_iters < 1) throw Error(ErrorKind::invalid_input, "max_iters must be at least 1");
    if (!(cfg.tol >= 0.0)) throw Error(ErrorKind::invalid_input, "tol must be non-negative");
}

inline double squared_distance(const StandardizedPoint& a, const StandardizedPoint& b) {
    const double d = distance(a, b);
    return d * d;
}

} // namespace detail

/// Initial centers, deterministic given (points, cfg).
///
/// farthest_point: the input point nearest the global barycenter, then
/// repeatedly the unchosen point with the largest distance to its nearest
/// chosen center. random_distinct: k distinct input points drawn with
/// SplitMix64(seed) by a partial Fisher-Yates shuffle. Ties go to the lowest
/// index.
[[nodiscard]] inline std::vector<StandardizedPoint> init_centers(std::span<const StandardizedPoint> points,
                                                                 const ClusteringConfig& cfg) {
    detail::validate_config(points, cfg);
    const std::size_t n = points.size();
    std::vector<StandardizedPoint> centers;
    centers.reserve(cfg.k);

    if (cfg.init == InitMethod::random_distinct) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        SplitMix64 rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.k; ++i) {
            const auto j = i + static_cast<std::size_t>(rng.below(n - i));
            std::swap(idx[i], idx[j]);
            centers.push_back(points[idx[i]]);
        }
        return centers;
    }

    const auto global = center_of_mass(points);
    std::size_t first = 0;
    double best = distance(global.point, points[0]);
    for (std::size_t j = 1; j < n; ++j) {
        const double dj = distance(global.point, points[j]);
        if (dj < best) {
            best = dj;
            first = j;
        }
    }
    std::vector<bool> chosen(n, false);
    std::vector<double> nearest(n);
    chosen[first] = true;
    centers.push_back(points[first]);
    for (std::size_t j = 0; j < n; ++j) nearest[j] = distance(points[first], points[j]);

    while (centers.size() < cfg.k) {
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (chosen[j]) continue;
            if (pick == n || nearest[j] > nearest[pick]) pick = j;
        }
        chosen[pick] = true;
        centers.push_back(points[pick]);
        for (std::size_t j = 0; j < n; ++j) nearest[j] = std::min(nearest[j], distance(points[pick], points[j]));
    }
    return centers;
}

/// Nearest center per point, ties to the lowest center index.
[[nodiscard]] inline std::vector<std::size_t> assign(std::span<const StandardizedPoint> points,
                                                     std::span<const StandardizedPoint> centers) {
    if (centers.empty()) throw Error(ErrorKind::empty_input, "no centers");
    std::vector<std::size_t> labels(points.size(), 0);
    for (std::size_t j = 0; j < points.size(); ++j) {
        double best = distance(centers[0], points[j]);
        for (std::size_t c = 1; c < centers.size(); ++c) {
            const double dc = distance(centers[c], points[j]);
            if (dc < best) {
                best = dc;
                labels[j] = c;
            }
        }
    }
    return labels;
}

[[nodiscard]] inline double inertia(std::span<const StandardizedPoint> points,
                                    std::span<const StandardizedPoint> centers,
                                    std::span<const std::size_t> labels) {
    double sum = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j) sum += detail::squared_distance(centers[labels[j]], points[j]);
    return sum / static_cast<double>(points.size());
}

namespace detail {

// Moves the point farthest from its center into each empty cluster.
inline void repair_empty_clusters(std::span<const StandardizedPoint> points,
                                  std::span<const StandardizedPoint> centers, std::vector<std::size_t>& labels) {
    std::vector<std::size_t> sizes(centers.size(), 0);
    for (auto l : labels) ++sizes[l];
    for (std::size_t c = 0; c < centers.size(); ++c) {
        if (sizes[c] != 0) continue;
        std::size_t pick = points.size();
        double worst = -1.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (sizes[labels[j]] < 2) continue;
            const double dj = distance(centers[labels[j]], points[j]);
            if (dj > worst) {
                worst = dj;
                pick = j;
            }
        }
        --sizes[labels[pick]];
        labels[pick] = c;
        sizes[c] = 1;
    }
}

inline std::vector<StandardizedPoint> update_centers(std::span<const StandardizedPoint> points,
                                                     std::span<const std::size_t> labels, std::size_t k) {
    std::vector<std::vector<StandardizedPoint>> members(k);
    for (std::size_t j = 0; j < points.size(); ++j) members[labels[j]].push_back(points[j]);
    std::vector<StandardizedPoint> centers;
    centers.reserve(k);
    for (const auto& group : members) centers.push_back(center_of_mass(group).point);
    return centers;
}

} // namespace detail

/// Alternates assignment and barycenter updates until the labels stop
/// changing or the inertia improves by less than cfg.tol. `converged` reports
/// whether one of those criteria fired within cfg.max_iters iterations.
[[nodiscard]] inline ClusterModel fit(std::span<const StandardizedPoint> points, const ClusteringConfig& cfg) {
    ClusterModel model;
    model.centers = init_centers(points, cfg);
    model.assignments = assign(points, model.centers);
    double previous = inertia(points, model.centers, model.assignments);
    model.inertia_history.push_back(previous);

    for (int it = 1; it <= cfg.max_iters; ++it) {
        detail::repair_empty_clusters(points, model.centers, model.assignments);
        model.centers = detail::update_centers(points, model.assignments, cfg.k);
        auto labels = assign(points, model.centers);
        const double current = inertia(points, model.centers, labels);
        model.inertia_history.push_back(current);
        model.iterations_run = it;

        const bool stable = labels == model.assignments;
        model.assignments = std::move(labels);
        model.inertia = current;
        if (stable || previous - current < cfg.tol) {
            model.converged = true;
            break;
        }
        previous = current;
    }
    return model;
}

} // namespace corrdist

#endif // CORRDIST_CLUSTERING_HPP
