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

#include "voidcrack/hsie.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "voidcrack/error.hpp"
#include "voidcrack/parallel.hpp"
#include "voidcrack/quadrature.hpp"
#include "voidcrack/simd.hpp"

namespace voidcrack::hsie {

using linalg::DenseMatrix;
using std::numbers::pi;

Grid::Grid(double a, std::size_t n) : a_(a), n_(n), h_(2.0 * a / static_cast<double>(n)) {
    if (!(a > 0.0)) throw ParameterError("half-length a must be positive");
    if (n < 2) throw ParameterError("grid needs at least 2 panels");
    const double dn = static_cast<double>(n);
    nodes_.resize(n + 1);
    midpoints_.resize(n);
    // a*(2j - n)/n keeps the layout exactly antisymmetric: t_{n-j} == -t_j.
    for (std::size_t j = 0; j <= n; ++j) {
        nodes_[j] = a * (2.0 * static_cast<double>(j) - dn) / dn;
    }
    for (std::size_t j = 0; j < n; ++j) {
        midpoints_[j] = a * (2.0 * static_cast<double>(j) + 1.0 - dn) / dn;
    }
}

double RegularKernel::panel_integral(double lo, double hi) const {
    if (identically_zero() || lo == hi) return 0.0;
    if (hi < lo) return -panel_integral(hi, lo);

    const double tol = integration_tolerance();
    auto f = [this](double y) { return value(y); };

    if (lo < 0.0 && hi > 0.0) {
        // Split at the singular point; the kernel is even.
        const double left = -lo;
        const double right_part = quadrature::toward_singularity(f, 0.0, hi, tol);
        if (left == hi) return 2.0 * right_part;
        return quadrature::toward_singularity(f, 0.0, left, tol) + right_part;
    }
    if (lo == 0.0) return quadrature::toward_singularity(f, 0.0, hi, tol);
    if (hi == 0.0) return quadrature::toward_singularity(f, 0.0, -lo, tol);

    const double width = hi - lo;
    const double distance = std::min(std::abs(lo), std::abs(hi));
    if (distance >= 0.25 * width) return quadrature::gauss(f, lo, hi);
    return quadrature::adaptive(f, lo, hi, tol);
}

double ChebSolution::opening(double t) const {
    if (std::abs(t) >= a) return 0.0;
    const double xi = t / a;
    double u_prev = 0.0;
    double u = 1.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        sum += coeffs[k] * u;
        const double next = 2.0 * xi * u - u_prev;
        u_prev = u;
        u = next;
    }
    return std::sqrt(a * a - t * t) * sum;
}

double chebyshev_u(int k, double x) {
    double u_prev = 0.0;
    double u = 1.0;
    for (int j = 0; j < k; ++j) {
        const double next = 2.0 * x * u - u_prev;
        u_prev = u;
        u = next;
    }
    return u;
}

void chebyshev_u_all(double x, std::span<double> out) {
    double u_prev = 0.0;
    double u = 1.0;
    for (double& slot : out) {
        slot = u;
        const double next = 2.0 * x * u - u_prev;
        u_prev = u;
        u = next;
    }
}

DenseMatrix characteristic_matrix(const Grid& grid) {
    const std::size_t n = grid.size();
    DenseMatrix m(n, n);
    const auto x = grid.midpoints();
    for (std::size_t i = 0; i < n; ++i) {
        simd::characteristic_row(x[i], grid.nodes(), m.row(i));
    }
    return m;
}

DenseMatrix regular_matrix(const Grid& grid, const RegularKernel& kernel) {
    const std::size_t n = grid.size();
    DenseMatrix m(n, n);
    if (kernel.identically_zero()) return m;

    const double h = grid.spacing();
    std::vector<double> by_offset(n);
    parallel_for(n, [&](std::size_t offset) {
        const double centre = static_cast<double>(offset) * h;
        by_offset[offset] = kernel.panel_integral(centre - 0.5 * h, centre + 0.5 * h);
    });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = by_offset[i > j ? i - j : j - i];
        }
    }
    return m;
}

namespace {

double max_abs(std::span<const double> v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

double max_residual(const DenseMatrix& a, std::span<const double> x, std::span<const double> b) {
    const auto ax = linalg::multiply(a, x);
    double best = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) best = std::max(best, std::abs(ax[i] - b[i]));
    return best;
}

}  // namespace

Solution solve(const HsieProblem& problem, std::size_t n) {
    if (n < 8) throw ParameterError("collocation needs n >= 8, got " + std::to_string(n));
    if (!problem.rhs) throw ConfigurationError("hypersingular problem has no right-hand side");
    Grid grid(problem.a, n);

    DenseMatrix a = characteristic_matrix(grid);
    if (problem.kernel && !problem.kernel->identically_zero()) {
        a += regular_matrix(grid, *problem.kernel);
    }
    std::vector<double> b(n);
    const auto x = grid.midpoints();
    for (std::size_t i = 0; i < n; ++i) b[i] = problem.rhs(x[i]);

    const linalg::LuFactorization lu(a);
    std::vector<double> g = lu.solve(b);
    double residual = max_residual(a, g, b);
    const double limit = 1e-10 * max_abs(b);
    if (residual > limit) {
        // One step of iterative refinement.
        const auto ag = linalg::multiply(a, g);
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ag[i];
        const auto dg = lu.solve(r);
        for (std::size_t i = 0; i < n; ++i) g[i] += dg[i];
        residual = max_residual(a, g, b);
        if (residual > limit) {
            throw SolverError("collocation residual " + std::to_string(residual) +
                                  " exceeds 1e-10 * ||b||",
                              n);
        }
    }
    return Solution{std::move(grid), std::move(g), residual};
}

namespace {

struct WeightedNode {
    double theta;
    double weight;
};

void append_gauss(std::vector<WeightedNode>& out, double lo, double hi) {
    const auto& rule = quadrature::gl16();
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < rule.size(); ++k) {
        out.push_back({mid + half * rule.nodes[k], half * rule.weights[k]});
    }
}

// Dyadic panels from `other` toward `singular`, closed by a single node that
// integrates A ln|d| + B exactly over the final sliver.
void append_toward(std::vector<WeightedNode>& out, double singular, double other) {
    const double width = other - singular;
    double outer = width;
    double inner = 0.5 * width;
    for (;;) {
        append_gauss(out, singular + std::min(inner, outer), singular + std::max(inner, outer));
        if (std::abs(inner) <= 1e-14 * std::abs(width)) break;
        outer = inner;
        inner *= 0.5;
    }
    out.push_back({singular + inner / std::numbers::e, std::abs(inner)});
}

// Quadrature on theta in [0, pi] for integrands log-singular at theta_s.
std::vector<WeightedNode> theta_rule(double theta_s, std::size_t base_panels) {
    std::vector<double> breaks;
    for (std::size_t j = 0; j <= base_panels; ++j) {
        breaks.push_back(pi * static_cast<double>(j) / static_cast<double>(base_panels));
    }
    // Keep the singular point at least half a base panel away from every
    // other interior break so undivided panels stay well separated from it.
    const double keep_out = 0.5 * pi / static_cast<double>(base_panels);
    std::erase_if(breaks, [&](double b) {
        return b > 0.0 && b < pi && std::abs(b - theta_s) < keep_out;
    });
    if (std::find(breaks.begin(), breaks.end(), theta_s) == breaks.end()) {
        breaks.push_back(theta_s);
        std::sort(breaks.begin(), breaks.end());
    }

    std::vector<WeightedNode> nodes;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        const double lo = breaks[j];
        const double hi = breaks[j + 1];
        if (hi - lo <= 0.0) continue;
        if (lo == theta_s) {
            append_toward(nodes, lo, hi);
        } else if (hi == theta_s) {
            append_toward(nodes, hi, lo);
        } else {
            append_gauss(nodes, lo, hi);
        }
    }
    return nodes;
}

// a^2 * int_0^pi sin(theta) sin((k+1) theta) K(x - a cos theta) dtheta for all k < m.
std::vector<double> regular_moments(const RegularKernel& kernel, double a, double x,
                                    std::size_t m) {
    std::vector<double> moments(m, 0.0);
    if (kernel.identically_zero()) return moments;
    const double ratio = x / a;
    const double theta_s = ratio >= 1.0 ? 0.0 : (ratio <= -1.0 ? pi : std::acos(ratio));
    const auto nodes = theta_rule(theta_s, std::max<std::size_t>(m + 1, 16));
    for (const auto& node : nodes) {
        const double separation = x - a * std::cos(node.theta);
        if (separation == 0.0) continue;
        const double w = node.weight * std::sin(node.theta) * kernel.value(separation);
        // sin((k+1) theta) by the angle-addition recurrence.
        const double s1 = std::sin(node.theta);
        const double c1 = std::cos(node.theta);
        double s_prev = 0.0;
        double s_cur = s1;
        for (std::size_t k = 0; k < m; ++k) {
            moments[k] += w * s_cur;
            const double next = 2.0 * c1 * s_cur - s_prev;
            s_prev = s_cur;
            s_cur = next;
        }
    }
    for (double& v : moments) v *= a * a;
    return moments;
}

// fp-int_{-1}^{1} sqrt(1 - t^2) U_k(t) / (xi - t)^2 dt for all k < m.
void characteristic_moments(double xi, std::span<double> out) {
    const std::size_t m = out.size();
    if (std::abs(xi) < 1.0) {
        chebyshev_u_all(xi, out);
        for (std::size_t k = 0; k < m; ++k) out[k] *= -pi * static_cast<double>(k + 1);
        return;
    }
    const double ax = std::abs(xi);
    const double root = std::sqrt(ax * ax - 1.0);
    const double w = ax - root;
    const double factor = ax / root - 1.0;
    double wk = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        double v = pi * static_cast<double>(k + 1) * wk * factor;
        if (xi < 0.0 && (k % 2 == 1)) v = -v;
        out[k] = v;
        wk *= w;
    }
}

}  // namespace

ChebSolution spectral_solve(const HsieProblem& problem, std::size_t m) {
    if (m < 4) throw ParameterError("spectral solve needs m >= 4, got " + std::to_string(m));
    if (!problem.rhs) throw ConfigurationError("hypersingular problem has no right-hand side");
    const double a = problem.a;
    if (!(a > 0.0)) throw ParameterError("half-length a must be positive");
    static const ZeroKernel zero;
    const RegularKernel& kernel = problem.kernel ? *problem.kernel : zero;

    DenseMatrix mat(m, m);
    std::vector<double> b(m);
    parallel_for(m, [&](std::size_t row) {
        const double xi = std::cos(pi * static_cast<double>(row + 1) / static_cast<double>(m + 1));
        const double x = a * xi;
        auto out = mat.row(row);
        characteristic_moments(xi, out);
        const auto reg = regular_moments(kernel, a, x, m);
        for (std::size_t k = 0; k < m; ++k) out[k] += reg[k];
        b[row] = problem.rhs(x);
    });

    const linalg::LuFactorization lu(mat);
    return ChebSolution{a, lu.solve(b)};
}

double apply_operator(const Solution& solution, const RegularKernel& kernel, double x) {
    const auto nodes = solution.grid.nodes();
    const double a = solution.grid.half_length();
    for (double t : nodes) {
        if (std::abs(x - t) <= 1e-14 * a) {
            throw DomainError("operator evaluated at a grid node x = " + std::to_string(x));
        }
    }
    const std::size_t n = solution.grid.size();
    std::vector<double> row(n);
    simd::characteristic_row(x, nodes, row);
    double value = simd::dot(row, solution.g);
    if (!kernel.identically_zero()) {
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = kernel.panel_integral(x - nodes[j + 1], x - nodes[j]);
        }
        value += simd::dot(row, solution.g);
    }
    return value;
}

double apply_operator(const ChebSolution& solution, const RegularKernel& kernel, double x) {
    const double a = solution.a;
    const double xi = x / a;
    if (std::abs(std::abs(xi) - 1.0) < 1e-14) {
        throw DomainError("spectral operator evaluated at a crack tip");
    }
    const std::size_t m = solution.order();
    std::vector<double> moments(m);
    characteristic_moments(xi, moments);
    const auto reg = regular_moments(kernel, a, x, m);
    double value = 0.0;
    for (std::size_t k = 0; k < m; ++k) value += solution.coeffs[k] * (moments[k] + reg[k]);
    return value;
}

}  // namespace voidcrack::hsie
