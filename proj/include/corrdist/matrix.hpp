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

#ifndef CORRDIST_MATRIX_HPP
#define CORRDIST_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace corrdist {

/// Dense row-major square matrix of doubles.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

    [[nodiscard]] static SquareMatrix identity(std::size_t dim) {
        SquareMatrix out(dim);
        for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
        return out;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * dim_ + j]; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }

    [[nodiscard]] bool is_symmetric() const noexcept {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    [[nodiscard]] double trace() const noexcept {
        double t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    [[nodiscard]] double frobenius_norm() const noexcept {
        double s = 0.0;
        for (double v : entries_) s += v * v;
        return std::sqrt(s);
    }

    [[nodiscard]] std::vector<double> apply(std::span<const double> x) const {
        std::vector<double> y(dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> entries_;
};

} // namespace corrdist

#endif // CORRDIST_MATRIX_HPP
