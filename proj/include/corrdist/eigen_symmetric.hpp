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

// Full eigendecomposition of a real symmetric matrix by the cyclic Jacobi
// method: sweep over all (p, q) pairs with p < q in row order and apply the
// plane rotation that zeroes a(p, q). Each sweep reduces the off-diagonal
// Frobenius norm; convergence is quadratic once it is small. The iteration
// stops when off(A) <= tolerance * max(1, |A|_F).

#ifndef CORRDIST_EIGEN_SYMMETRIC_HPP
#define CORRDIST_EIGEN_SYMMETRIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "corrdist/error.hpp"
#include "corrdist/matrix.hpp"
#include "corrdist/standardize.hpp"

namespace corrdist {

struct JacobiOptions {
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Eigenvalues sorted descending; eigenvectors[k] is the unit vector paired
/// with eigenvalues[k], sign-canonicalized (first significant component > 0).
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    int sweeps = 0;
};

namespace detail {

inline double off_diagonal_norm(const SquareMatrix& a) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

// Applies A <- J^T A J and V <- V J for the rotation annihilating a(p, q).
inline void jacobi_rotate(SquareMatrix& a, SquareMatrix& v, std::size_t p, std::size_t q) noexcept {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p);
        const double akq = a(k, q);
        const double new_kp = c * akp - s * akq;
        const double new_kq = s * akp + c * akq;
        a(k, p) = a(p, k) = new_kp;
        a(k, q) = a(q, k) = new_kq;
    }
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

inline void canonicalize_sign(std::vector<double>& vec) noexcept {
    for (double x : vec) {
        if (std::abs(x) > sign_significance) {
            if (x < 0.0) {
                for (double& y : vec) y = -y;
            }
            return;
        }
    }
}

} // namespace detail

/// Throws ErrorKind::invalid_input for non-symmetric input and
/// ErrorKind::convergence_failure when the sweep budget runs out.
[[nodiscard]] inline EigenDecomposition eigen_symmetric(const SquareMatrix& m, const JacobiOptions& options = {}) {
    if (!m.is_symmetric()) {
        throw Error(ErrorKind::invalid_input, "eigen_symmetric requires a symmetric matrix");
    }
    const std::size_t n = m.dim();
    SquareMatrix a = m;
    SquareMatrix v = SquareMatrix::identity(n);
    const double threshold = options.tolerance * std::max(1.0, m.frobenius_norm());

    int sweeps = 0;
    while (detail::off_diagonal_norm(a) > threshold) {
        if (sweeps == options.max_sweeps) {
            throw Error(ErrorKind::convergence_failure,
                        "Jacobi iteration did not converge within " + std::to_string(options.max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
        ++sweeps;
    }

    // Stable: ties keep the order the sweeps left them in.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.sweeps = sweeps;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(a(k, k));
        std::vector<double> vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, k);
        detail::canonicalize_sign(vec);
        out.eigenvectors.push_back(std::move(vec));
    }
    return out;
}

} // namespace corrdist

#endif // CORRDIST_EIGEN_SYMMETRIC_HPP
