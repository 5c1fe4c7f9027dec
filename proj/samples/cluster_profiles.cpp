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

// Groups expression-like profiles by correlation shape, ignoring scale,
// offset and sign, then prints each group's center.

#include <cstdio>
#include <vector>

#include "corrdist/corrdist.hpp"

int main() {
    using namespace corrdist;
    const std::vector<SamplePoint> raw{
        {1.0, 2.0, 4.0, 8.0, 16.0},     {10.0, 20.0, 40.0, 80.0, 160.0}, {5.0, 4.0, 2.0, -2.0, -10.0},
        {3.0, 1.0, 3.0, 1.0, 3.0},      {0.2, 0.6, 0.2, 0.6, 0.2},       {2.0, 2.5, 4.1, 7.9, 15.5},
    };
    std::vector<StandardizedPoint> points;
    for (const auto& p : raw) points.push_back(standardize(p));

    const auto model = fit(points, ClusteringConfig{.k = 2});
    for (std::size_t c = 0; c < model.centers.size(); ++c) {
        std::printf("cluster %zu:", c);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (model.assignments[j] == c) std::printf(" %zu", j);
        std::printf("\n  center:");
        for (double v : model.centers[c].values()) std::printf(" %+.4f", v);
        std::printf("\n");
    }
    std::printf("inertia %.3g after %d iterations\n", model.inertia, model.iterations_run);
}
