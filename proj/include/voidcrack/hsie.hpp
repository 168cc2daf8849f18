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

// Normalized hypersingular integral equation
//
//   fp-int_{-a}^{a} [ 1/(x-t)^2 + K(x-t) ] g(t) dt = f(x),   |x| < a,
//
// with an even regular kernel K that may carry a logarithmic singularity at
// zero separation. Two independent solvers: piecewise-constant midpoint
// collocation on a uniform grid (closed-form finite-part panel integrals), and
// a Chebyshev-U spectral method on the weight sqrt(a^2 - t^2) used as an
// oracle.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "voidcrack/linalg.hpp"

namespace voidcrack::hsie {

/// Uniform panels on [-a, a]; collocation at panel midpoints.
class Grid {
public:
    /// Throws ParameterError unless a > 0 and n >= 2.
    Grid(double a, std::size_t n);

    double half_length() const noexcept { return a_; }
    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }

    /// Nodes t_0 = -a, ..., t_n = a.
    std::span<const double> nodes() const noexcept { return nodes_; }
    /// Midpoint of panel j (0-based), i.e. of [t_j, t_{j+1}].
    std::span<const double> midpoints() const noexcept { return midpoints_; }

private:
    double a_;
    std::size_t n_;
    double h_;
    std::vector<double> nodes_;
    std::vector<double> midpoints_;
};

/// Even kernel of the separation x - t, finite away from zero.
class RegularKernel {
public:
    virtual ~RegularKernel() = default;

    virtual double value(double separation) const = 0;

    /// Integral of value(y) for y from lo to hi. The default refines dyadically
    /// toward y = 0 when it lies in (or near) the interval.
    virtual double panel_integral(double lo, double hi) const;

    virtual bool identically_zero() const { return false; }

    virtual double integration_tolerance() const { return 1e-11; }
};

class ZeroKernel final : public RegularKernel {
public:
    double value(double) const override { return 0.0; }
    double panel_integral(double, double) const override { return 0.0; }
    bool identically_zero() const override { return true; }
};

class ConstantKernel final : public RegularKernel {
public:
    explicit ConstantKernel(double c) : c_(c) {}
    double value(double) const override { return c_; }
    double panel_integral(double lo, double hi) const override { return c_ * (hi - lo); }

private:
    double c_;
};

/// Adapts an arbitrary even function; the caller guarantees evenness.
class FunctionKernel final : public RegularKernel {
public:
    explicit FunctionKernel(std::function<double(double)> fn, double tol = 1e-11)
        : fn_(std::move(fn)), tol_(tol) {}
    double value(double y) const override { return fn_(y); }
    double integration_tolerance() const override { return tol_; }

private:
    std::function<double(double)> fn_;
    double tol_;
};

struct HsieProblem {
    double a = 1.0;
    std::shared_ptr<const RegularKernel> kernel = std::make_shared<ZeroKernel>();
    std::function<double(double)> rhs;
};

struct Solution {
    Grid grid;
    std::vector<double> g;     ///< density on each panel
    double residual_norm = 0;  ///< max_i |(A g - b)_i|
};

/// g(t) = sqrt(a^2 - t^2) * sum_k coeffs[k] U_k(t/a).
struct ChebSolution {
    double a = 1.0;
    std::vector<double> coeffs;

    std::size_t order() const noexcept { return coeffs.size(); }
    double opening(double t) const;
};

/// Chebyshev polynomial of the second kind U_k(x) by the three-term recurrence.
double chebyshev_u(int k, double x);

/// Fills U_0(x) .. U_{out.size()-1}(x).
void chebyshev_u_all(double x, std::span<double> out);

/// Entry (i, j) = finite-part integral over panel j of dt/(x_i - t)^2
///              = 1/(x_i - t_{j+1}) - 1/(x_i - t_j).
linalg::DenseMatrix characteristic_matrix(const Grid& grid);

/// Entry (i, j) = integral over panel j of K(x_i - t) dt. Uses the Toeplitz
/// structure of the uniform grid: each distinct offset is integrated once.
linalg::DenseMatrix regular_matrix(const Grid& grid, const RegularKernel& kernel);

/// Collocation solve; throws ParameterError for n < 8 and SolverError for a
/// numerically singular system.
Solution solve(const HsieProblem& problem, std::size_t n);

/// Spectral solve with m Chebyshev-U terms collocated at the roots of U_m(x/a).
ChebSolution spectral_solve(const HsieProblem& problem, std::size_t m);

/// Discrete operator value fp-int g(t)[1/(x-t)^2 + K(x-t)] dt at x off the grid
/// nodes. Throws DomainError at a node.
double apply_operator(const Solution& solution, const RegularKernel& kernel, double x);

/// Operator value for the spectral representation; |x| != a.
double apply_operator(const ChebSolution& solution, const RegularKernel& kernel, double x);

}  // namespace voidcrack::hsie
