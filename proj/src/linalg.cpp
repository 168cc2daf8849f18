// Copyright 2026 the voidcrack authors
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

#include "voidcrack/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "voidcrack/error.hpp"
#include "voidcrack/simd.hpp"

namespace voidcrack::linalg {

double DenseMatrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (double v : row(i)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) {
        throw std::invalid_argument("DenseMatrix: shape mismatch in +=");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x) {
    if (x.size() != a.cols()) throw std::invalid_argument("multiply: shape mismatch");
    std::vector<double> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] = simd::dot(a.row(i), x);
    return y;
}

LuFactorization::LuFactorization(DenseMatrix a, double pivot_tol)
    : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw std::invalid_argument("LuFactorization: matrix must be square");
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});

    const double threshold = pivot_tol * lu_.norm_inf();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (!(best > threshold)) {
            throw SolverError("numerically singular matrix: pivot " + std::to_string(k) +
                                  " has magnitude " + std::to_string(best),
                              k);
        }
        if (p != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
            std::swap(perm_[k], perm_[p]);
        }
        const double pivot = lu_(k, k);
        const auto pivot_tail = lu_.row(k).subspan(k + 1);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / pivot;
            lu_(i, k) = factor;
            if (factor != 0.0) simd::axpy(-factor, pivot_tail, lu_.row(i).subspan(k + 1));
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
    const std::size_t n = lu_.rows();
    if (b.size() != n) throw std::invalid_argument("LuFactorization::solve: size mismatch");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[perm_[i]] - simd::dot(lu_.row(i).first(i), std::span<const double>(x).first(i));
    }
    for (std::size_t i = n; i-- > 0;) {
        const auto tail = lu_.row(i).subspan(i + 1);
        x[i] = (x[i] - simd::dot(tail, std::span<const double>(x).subspan(i + 1))) / lu_(i, i);
    }
    return x;
}

std::vector<double> least_squares(DenseMatrix a, std::vector<double> b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < n || b.size() != m) throw std::invalid_argument("least_squares: bad dimensions");

    std::vector<double> diag(n);
    for (std::size_t k = 0; k < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < m; ++i) norm = std::hypot(norm, a(i, k));
        const double alpha = a(k, k) > 0.0 ? -norm : norm;
        if (norm == 0.0) throw SolverError("least_squares: rank-deficient column", k);
        // Reflector v = x - alpha e_k stored in column k.
        a(k, k) -= alpha;
        const double vtv = -2.0 * alpha * a(k, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += a(i, k) * a(i, j);
            s *= 2.0 / vtv;
            for (std::size_t i = k; i < m; ++i) a(i, j) -= s * a(i, k);
        }
        double s = 0.0;
        for (std::size_t i = k; i < m; ++i) s += a(i, k) * b[i];
        s *= 2.0 / vtv;
        for (std::size_t i = k; i < m; ++i) b[i] -= s * a(i, k);
        diag[k] = alpha;
    }

    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::abs(d));
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        if (std::abs(diag[k]) <= 1e-14 * scale) {
            throw SolverError("least_squares: rank-deficient column", k);
        }
        double s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
        x[k] = s / diag[k];
    }
    return x;
}

}  // namespace voidcrack::linalg
