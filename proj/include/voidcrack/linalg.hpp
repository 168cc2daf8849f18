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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace voidcrack::linalg {

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<const double> data() const noexcept { return data_; }

    /// Maximum absolute row sum.
    double norm_inf() const;

    DenseMatrix& operator+=(const DenseMatrix& other);

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);

/// LU factorization with row (partial) pivoting, P·A = L·U.
class LuFactorization {
public:
    /// Throws SolverError naming the elimination step whose pivot falls below
    /// pivot_tol * ||A||_inf.
    explicit LuFactorization(DenseMatrix a, double pivot_tol = 1e-13);

    std::vector<double> solve(std::span<const double> b) const;

    std::size_t size() const noexcept { return lu_.rows(); }

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
};

/// Least-squares solution of the overdetermined system A x ~ b by Householder
/// QR. Requires rows >= cols; throws SolverError for a rank-deficient A.
std::vector<double> least_squares(DenseMatrix a, std::vector<double> b);

}  // namespace voidcrack::linalg
