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

// Plane-strain crack |x| < a, y = 0 under a symmetric normal load sigma0 on
// its faces, in a porous medium characterized by (c2, N). The kernel equation
// is divided by the characteristic coefficient -c0/pi, which leaves
//
//   fp-int g(t) [1/(x-t)^2 + Kr(x-t)] dt = pi * load / (1 - c2),
//   load = sigma0 / (2 mu),
//
// independent of N. Stresses are reported as sigma_yy / sigma0 and the
// stress-concentration factor k in units of sigma0 * length, so the classical
// value is k0 = a.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "voidcrack/hsie.hpp"
#include "voidcrack/kernel.hpp"
#include "voidcrack/symbol.hpp"

namespace voidcrack::crack {

/// Largest half-length whose stress samples stay within the kernel's range.
inline constexpr double kMaxHalfLength = 40.0;

struct CrackProblem {
    symbol::SymbolSpec spec{0.2, 0.0};
    double a = 1.0;     ///< dimensionless half-length
    double load = 0.5;  ///< sigma0 / (2 mu)

    /// Throws ParameterError unless a > 0 and load > 0.
    void validate() const;
};

/// Constant right-hand side pi * load / (1 - c2).
double normalized_rhs(const CrackProblem& problem);

std::shared_ptr<const kernel::PorousKernel> make_kernel(const CrackProblem& problem,
                                                        const kernel::KernelSettings& settings);

/// Normalized problem with the porous regular kernel.
hsie::HsieProblem assemble(const CrackProblem& problem, const kernel::KernelSettings& settings);

struct CrackSolution {
    CrackProblem problem;
    std::shared_ptr<const kernel::PorousKernel> kernel;
    hsie::Solution solution;  ///< g reported as an opening (sum of g >= 0)
    bool negated = false;     ///< the raw solver density was globally negated
    double stress_scale = 0;  ///< sigma_yy/sigma0 = stress_scale * operator(g)
};

/// Solves an assembled problem; `problem` supplies the normalization.
CrackSolution solve_assembled(const CrackProblem& problem, const hsie::HsieProblem& assembled,
                              std::size_t n);

/// Crack opening on n >= 50 panels.
CrackSolution crack_opening(const CrackProblem& problem, const kernel::KernelSettings& settings,
                            std::size_t n);

/// sigma_yy(x, 0) / sigma0 ahead of the crack, |x| > a.
double stress_outside(const CrackSolution& solution, double x);

struct ScfDiagnostics {
    std::vector<double> epsilons;           ///< x = a (1 + eps) sample offsets
    std::vector<double> limit_samples;      ///< |sigma| sqrt(x^2 - a^2), both tips averaged
    std::vector<double> limit_fit;          ///< route A fit coefficients, k first
    double edge_coefficient_left = 0;       ///< route B sqrt-coefficient at x = -a
    double edge_coefficient_right = 0;      ///< route B sqrt-coefficient at x = +a
    std::size_t edge_panels = 0;            ///< panels per tip in the route B fit
    bool negated = false;
};

struct ScfResult {
    double k = 0;        ///< reported factor (route B)
    double k0 = 0;       ///< classical factor, equal to a
    double ratio = 0;    ///< k / k0
    double route_a = 0;  ///< limit of |sigma| sqrt(x^2 - a^2) as x -> a+
    double route_b = 0;  ///< from the square-root edge behaviour of g
    bool flagged = false;  ///< routes differ by more than kRouteTolerance
    ScfDiagnostics diagnostics;
};

inline constexpr double kRouteTolerance = 0.05;

ScfResult scf(const CrackSolution& solution);

enum class SweepAxis { N, c2, a };

std::string_view axis_name(SweepAxis axis) noexcept;

struct SweepRow {
    double value = 0;
    ScfResult scf;
    std::size_t n = 0;
    double residual_norm = 0;
};

/// One independent solve per value, in parallel; rows follow input order.
/// Every value is validated first; a bad one throws ParameterError naming its
/// index before anything is solved.
std::vector<SweepRow> sweep(const CrackProblem& base, const kernel::KernelSettings& settings,
                            SweepAxis axis, const std::vector<double>& values, std::size_t n);

}  // namespace voidcrack::crack
