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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "corrdist/barycenter.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace corrdist;
using corrdist::testing::Rng;

namespace {

std::vector<StandardizedPoint> worked_pair() {
    return {standardize(SamplePoint{1, 2, 3}), standardize(SamplePoint{1, 3, 2})};
}

} // namespace

TEST(ObjectiveF, Examples) {
    const auto x = standardize(SamplePoint{2, 9, 4, 1});
    const std::vector<StandardizedPoint> single{x};
    EXPECT_NEAR(objective_F(x, single), 0.0, 1e-15);

    // 1 - ((a.a)^2 + (a.b)^2) / (2 * 3^2) = 1 - (9 + 2.25) / 18
    const auto pair = worked_pair();
    EXPECT_NEAR(objective_F(pair[0], pair), 0.375, 1e-15);

    const std::vector<StandardizedPoint> antipodal{x, -x};
    EXPECT_NEAR(objective_F(x, antipodal), 0.0, 1e-15);

    EXPECT_THROW((void)objective_F(x, std::vector<StandardizedPoint>{}), Error);
    EXPECT_THROW((void)objective_F(pair[0], single), Error);
}

TEST(ObjectiveF, EqualsMeanSquaredDistance) {
    Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = corrdist::testing::uniform_index(rng, 2, 20);
        const auto pts = corrdist::testing::random_dataset(rng, corrdist::testing::uniform_index(rng, 1, 30), d);
        const auto g = corrdist::testing::random_standardized(rng, d);
        double mean_sq = 0.0;
        for (const auto& x : pts) mean_sq += distance(g, x) * distance(g, x);
        mean_sq /= static_cast<double>(pts.size());
        EXPECT_NEAR(objective_F(g, pts), mean_sq, 1e-10);
    }
}

TEST(ConstraintH, ZeroOnSphere) {
    const auto x = standardize(SamplePoint{5, 1, 8, 3, 3});
    EXPECT_NEAR(constraint_H(x.values()), 0.0, 1e-15);
    const std::vector<double> off{1.0, 1.0, 1.0};
    EXPECT_NEAR(constraint_H(off), 0.0, 1e-15);
    const std::vector<double> inside{1.0, 0.0, 0.0};
    EXPECT_NEAR(constraint_H(inside), 2.0 / 3.0, 1e-15);
}

TEST(BuildScatter, Examples) {
    const auto m = build_scatter(worked_pair());
    const double expected[3][3] = {{0.5, -0.25, -0.25}, {-0.25, 0.25, 0.0}, {-0.25, 0.0, 0.25}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(m(i, k), expected[i][k], 1e-15);
    EXPECT_EQ(m.count, 2u);
    EXPECT_NEAR(m.matrix.trace(), 1.0, 1e-15);

    const auto x = standardize(SamplePoint{4, 0, 1, 7});
    const auto single = build_scatter(std::vector<StandardizedPoint>{x});
    const auto mx = single.matrix.apply(x.values());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(mx[i], x[i], 1e-14);

    EXPECT_THROW((void)build_scatter(std::vector<StandardizedPoint>{}), Error);
    const std::vector<StandardizedPoint> mixed{x, worked_pair()[0]};
    EXPECT_THROW((void)build_scatter(mixed), Error);
}

TEST(BuildScatter, Invariants) {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = corrdist::testing::uniform_index(rng, 2, 30);
        const auto pts = corrdist::testing::random_dataset(rng, corrdist::testing::uniform_index(rng, 1, 40), d);
        const auto m = build_scatter(pts);
        EXPECT_TRUE(m.matrix.is_symmetric());
        EXPECT_NEAR(m.matrix.trace(), 1.0, 1e-12 * static_cast<double>(d));
        const std::vector<double> ones(d, 1.0);
        double n1 = 0.0;
        for (double v : m.matrix.apply(ones)) n1 += v * v;
        EXPECT_LE(std::sqrt(n1), 1e-10);
        for (double lambda : corrdist::testing::reference_eigenvalues(m.matrix)) EXPECT_GE(lambda, -1e-10);
    }
}

TEST(CenterOfMass, SinglePoint) {
    const auto x = standardize(SamplePoint{9, 2, 4, 4, 1});
    const auto b = center_of_mass(std::vector<StandardizedPoint>{-x});
    const auto cx = canonicalize(x);
    for (std::size_t i = 0; i < x.dim(); ++i) EXPECT_NEAR(b.point[i], cx[i], 1e-12);
    EXPECT_NEAR(b.eigenvalue, 1.0, 1e-12);
    EXPECT_NEAR(b.objective, 0.0, 1e-12);
    EXPECT_FALSE(b.degenerate);
}

TEST(CenterOfMass, WorkedPair) {
    const auto b = center_of_mass(worked_pair());
    EXPECT_NEAR(b.point[0], std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(b.point[1], -std::sqrt(2.0) / 2, 1e-12);
    EXPECT_NEAR(b.point[2], -std::sqrt(2.0) / 2, 1e-12);
    EXPECT_NEAR(b.eigenvalue, 0.75, 1e-12);
    EXPECT_NEAR(b.objective, 0.25, 1e-12);
    EXPECT_FALSE(b.degenerate);
}

TEST(CenterOfMass, OrthogonalPairIsDegenerate) {
    const std::vector<StandardizedPoint> pts{StandardizedPoint{1, -1, 1, -1}, StandardizedPoint{1, 1, -1, -1}};
    const auto b = center_of_mass(pts);
    EXPECT_NEAR(b.eigenvalue, 0.5, 1e-12);
    EXPECT_NEAR(b.objective, 0.5, 1e-12);
    EXPECT_TRUE(b.degenerate);
    // any unit vector in the span minimizes F; the returned one is in the span
    const double c0 = dot(b.point.values(), pts[0].values()) / 4.0;
    const double c1 = dot(b.point.values(), pts[1].values()) / 4.0;
    EXPECT_NEAR(c0 * c0 + c1 * c1, 1.0, 1e-12);
    // and the result is reproducible
    EXPECT_EQ(center_of_mass(pts).point, b.point);
}

TEST(CenterOfMass, Errors) {
    EXPECT_THROW((void)center_of_mass(std::vector<StandardizedPoint>{}), Error);
    const std::vector<StandardizedPoint> mixed{StandardizedPoint{1, -1, 1, -1}, standardize(SamplePoint{1, 2, 3})};
    EXPECT_THROW((void)center_of_mass(mixed), Error);
}

TEST(CenterOfMassProperties, RandomDatasets) {
    Rng rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t d = corrdist::testing::uniform_index(rng, 2, 25);
        const std::size_t n = corrdist::testing::uniform_index(rng, 1, 30);
        auto pts = corrdist::testing::random_dataset(rng, n, d);
        const auto b = center_of_mass(pts);
        const auto m = build_scatter(pts);
        const double root_d = std::sqrt(static_cast<double>(d));

        // stationarity M g = lambda g
        const auto mg = m.matrix.apply(b.point.values());
        double res = 0.0;
        for (std::size_t i = 0; i < d; ++i) res += std::pow(mg[i] - b.eigenvalue * b.point[i], 2);
        EXPECT_LE(std::sqrt(res), 1e-9 * root_d);

        EXPECT_LE(std::abs(constraint_H(b.point.values())), 1e-10);
        EXPECT_NEAR(b.objective, 1.0 - b.eigenvalue, 1e-10);
        EXPECT_GE(b.eigenvalue, 1.0 / static_cast<double>(d) - 1e-10);
        EXPECT_LE(b.eigenvalue, 1.0 + 1e-10);
        EXPECT_EQ(canonicalize(b.point), b.point);
        EXPECT_NEAR(b.eigenvalue, corrdist::testing::reference_eigenvalues(m.matrix).front(), 1e-12);

        for (int probe = 0; probe < 50; ++probe) {
            const auto q = corrdist::testing::random_sphere_point(rng, d);
            EXPECT_LE(b.objective, objective_F(q, pts) + 1e-9);
        }
        for (const auto& x : pts) EXPECT_LE(b.objective, objective_F(x, pts) + 1e-9);

        if (b.degenerate) continue;

        // negating any subset leaves M, hence the result, bit-identical
        auto flipped = pts;
        for (std::size_t j = 0; j < n; j += 2) flipped[j] = -flipped[j];
        const auto bf = center_of_mass(flipped);
        EXPECT_EQ(bf.point, b.point);
        EXPECT_EQ(bf.eigenvalue, b.eigenvalue);

        // permutations change the summation order only
        std::shuffle(pts.begin(), pts.end(), rng);
        const auto bp = center_of_mass(pts);
        for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(bp.point[i], b.point[i], 1e-9);
        EXPECT_NEAR(bp.eigenvalue, b.eigenvalue, 1e-12);
    }
}
