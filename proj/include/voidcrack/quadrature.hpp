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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace voidcrack::quadrature {

/// Gauss–Legendre rule on [-1, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Computes the n-point Gauss–Legendre rule by Newton iteration on P_n.
Rule gauss_legendre(int n);

/// Shared 16-point rule, built once.
const Rule& gl16();

template <class F>
double gauss(F&& f, double a, double b, const Rule& rule = gl16()) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    return half * sum;
}

namespace detail {

template <class F>
double adaptive_step(F& f, double a, double b, double coarse, double rel_tol, double abs_tol,
                     int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss(f, a, mid);
    const double right = gauss(f, mid, b);
    const double fine = left + right;
    // Non-finite values cannot converge; let the caller see them.
    if (!std::isfinite(fine) || depth <= 0 || std::abs(fine - coarse) <= std::max(rel_tol * std::abs(fine), abs_tol)) {
        return fine;
    }
    return adaptive_step(f, a, mid, left, rel_tol, 0.5 * abs_tol, depth - 1) +
           adaptive_step(f, mid, b, right, rel_tol, 0.5 * abs_tol, depth - 1);
}

}  // namespace detail

/// Adaptive bisection with 16-point Gauss panels; a panel is accepted when its
/// two halves agree with it to max(rel_tol*|I|, abs_tol).
template <class F>
double adaptive(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                int max_depth = 40) {
    if (a == b) return 0.0;
    return detail::adaptive_step(f, a, b, gauss(f, a, b), rel_tol, abs_tol, max_depth);
}

/// Integrates f from `singular_end` to `other_end` where f may carry an
/// integrable logarithmic singularity at `singular_end`. Panels are dyadic
/// toward the singular end; the last sliver [s, s+d] is closed with d*f(s+d/e),
/// which is exact for f = A ln|y - s| + B.
template <class F>
double toward_singularity(F&& f, double singular_end, double other_end, double rel_tol) {
    const double width = other_end - singular_end;
    if (width == 0.0) return 0.0;
    double outer = width;
    double inner = 0.5 * width;
    double sum = adaptive(f, singular_end + inner, singular_end + outer, rel_tol);
    int quiet = 0;
    for (int level = 1; level < 200; ++level) {
        outer = inner;
        inner *= 0.5;
        const double piece = gauss(f, singular_end + inner, singular_end + outer);
        sum += piece;
        const bool tiny_panel = std::abs(inner) < 1e-13 * std::abs(width);
        const bool tiny_piece = std::abs(piece) <= 1e-3 * rel_tol * std::abs(sum);
        quiet = tiny_piece ? quiet + 1 : 0;
        if (tiny_panel && quiet >= 3) break;
        // Below this the nodes s + d are no longer resolved in floating point.
        if (std::abs(inner) < 1e-14 * std::max(std::abs(singular_end), std::abs(width))) break;
        if (std::abs(inner) < 1e-280) break;
    }
    return sum + inner * f(singular_end + inner / std::numbers::e);
}

}  // namespace voidcrack::quadrature
