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

#include "voidcrack/crack.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "voidcrack/error.hpp"
#include "voidcrack/linalg.hpp"
#include "voidcrack/parallel.hpp"

namespace voidcrack::crack {

using std::numbers::pi;

void CrackProblem::validate() const {
    if (!(a > 0.0)) throw ParameterError("crack half-length a must be positive");
    // The SCF samples reach x = 1.25 a, i.e. separations up to 2.25 a.
    if (!(a <= kMaxHalfLength)) {
        throw ParameterError("crack half-length a must not exceed " + std::to_string(static_cast<int>(kMaxHalfLength)));
    }
    if (!(load > 0.0)) throw ParameterError("load sigma0/(2 mu) must be positive");
}

double normalized_rhs(const CrackProblem& problem) {
    return pi * problem.load / (1.0 - problem.spec.c2());
}

std::shared_ptr<const kernel::PorousKernel> make_kernel(const CrackProblem& problem,
                                                        const kernel::KernelSettings& settings) {
    return std::make_shared<kernel::PorousKernel>(kernel::KernelConfig{problem.spec, settings});
}

hsie::HsieProblem assemble(const CrackProblem& problem, const kernel::KernelSettings& settings) {
    problem.validate();
    const double f = normalized_rhs(problem);
    return hsie::HsieProblem{problem.a, make_kernel(problem, settings), [f](double) { return f; }};
}

CrackSolution solve_assembled(const CrackProblem& problem, const hsie::HsieProblem& assembled,
                              std::size_t n) {
    if (n < 50) throw ParameterError("crack solve needs n >= 50 panels");
    problem.validate();
    auto porous = std::dynamic_pointer_cast<const kernel::PorousKernel>(assembled.kernel);
    if (!porous) throw ConfigurationError("crack problem must carry the porous kernel");

    CrackSolution out{problem, std::move(porous), hsie::solve(assembled, n), false, 0.0};
    auto& g = out.solution.g;
    if (std::accumulate(g.begin(), g.end(), 0.0) < 0.0) {
        for (double& v : g) v = -v;
        out.negated = true;
    }
    // The raw density satisfies the equation with a tensile face load; the
    // exterior perturbation stress is -(1 - c2)/(pi load) times its operator.
    const double magnitude = (1.0 - problem.spec.c2()) / (pi * problem.load);
    out.stress_scale = out.negated ? magnitude : -magnitude;
    return out;
}

CrackSolution crack_opening(const CrackProblem& problem, const kernel::KernelSettings& settings,
                            std::size_t n) {
    return solve_assembled(problem, assemble(problem, settings), n);
}

double stress_outside(const CrackSolution& solution, double x) {
    if (!(std::abs(x) > solution.problem.a)) {
        throw DomainError("stress_outside requires |x| > a");
    }
    return solution.stress_scale * hsie::apply_operator(solution.solution, *solution.kernel, x);
}

namespace {

// Route A: F(eps) = |sigma/sigma0| sqrt(x^2 - a^2) / a at x = a (1 + eps),
// fitted by k + b1 sqrt(eps) + b2 eps + b3 eps^1.5 + e (h/a)/eps. The last
// term absorbs the discretization layer of width ~h next to the tip.
double limit_route(const CrackSolution& sol, ScfDiagnostics& diag) {
    const double a = sol.problem.a;
    const double h_rel = sol.solution.grid.spacing() / a;
    const double eps_lo = std::min(8.0 * h_rel, 1.0 / 32.0);
    const double eps_hi = 0.25;
    constexpr std::size_t samples = 8;

    linalg::DenseMatrix basis(samples, 5);
    std::vector<double> values(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double eps =
            eps_lo * std::pow(eps_hi / eps_lo, static_cast<double>(i) / (samples - 1));
        const double x = a * (1.0 + eps);
        const double root = std::sqrt(x * x - a * a) / a;
        const double right = std::abs(stress_outside(sol, x));
        const double left = std::abs(stress_outside(sol, -x));
        const double f = 0.5 * (right + left) * root;
        diag.epsilons.push_back(eps);
        diag.limit_samples.push_back(f);
        const double se = std::sqrt(eps);
        basis(i, 0) = 1.0;
        basis(i, 1) = se;
        basis(i, 2) = eps;
        basis(i, 3) = eps * se;
        basis(i, 4) = h_rel / eps;
        values[i] = f;
    }
    diag.limit_fit = linalg::least_squares(std::move(basis), std::move(values));
    return a * diag.limit_fit[0];
}

// Fits g ~ C sqrt(d) + D d^1.5 + E h/sqrt(d), d = distance of the panel
// midpoint from the tip, over the outermost panels of one tip.
double edge_coefficient(const hsie::Solution& s, bool right_tip, std::size_t panels) {
    const double a = s.grid.half_length();
    const double h = s.grid.spacing();
    const auto mid = s.grid.midpoints();
    const std::size_t n = s.grid.size();
    linalg::DenseMatrix basis(panels, 3);
    std::vector<double> values(panels);
    for (std::size_t r = 0; r < panels; ++r) {
        const std::size_t j = right_tip ? n - 1 - r : r;
        const double d = a - std::abs(mid[j]);
        const double sd = std::sqrt(d);
        basis(r, 0) = sd;
        basis(r, 1) = d * sd;
        basis(r, 2) = h / sd;
        values[r] = s.g[j];
    }
    return linalg::least_squares(std::move(basis), std::move(values))[0];
}

}  // namespace

ScfResult scf(const CrackSolution& solution) {
    const auto& problem = solution.problem;
    const double a = problem.a;
    ScfResult r;
    r.k0 = a;
    r.diagnostics.negated = solution.negated;

    const std::size_t n = solution.solution.grid.size();
    const std::size_t panels = std::max<std::size_t>(4, n / 20);
    r.diagnostics.edge_panels = panels;
    r.diagnostics.edge_coefficient_left = edge_coefficient(solution.solution, false, panels);
    r.diagnostics.edge_coefficient_right = edge_coefficient(solution.solution, true, panels);
    const double c = 0.5 * (r.diagnostics.edge_coefficient_left +
                            r.diagnostics.edge_coefficient_right);
    // Classical edge: g ~ load/(1-c2) sqrt(2a) sqrt(d) and k = a.
    r.route_b = std::abs((1.0 - problem.spec.c2()) * c * std::sqrt(2.0 * a) / (2.0 * problem.load));
    r.route_a = limit_route(solution, r.diagnostics);

    r.k = r.route_b;
    r.ratio = r.k / r.k0;
    r.flagged = !(std::abs(r.route_a - r.route_b) <= kRouteTolerance * r.route_b);
    return r;
}

std::string_view axis_name(SweepAxis axis) noexcept {
    switch (axis) {
        case SweepAxis::N:
            return "N";
        case SweepAxis::c2:
            return "c2";
        case SweepAxis::a:
            return "a";
    }
    return "?";
}

namespace {

CrackProblem with_value(const CrackProblem& base, SweepAxis axis, double v) {
    CrackProblem p = base;
    switch (axis) {
        case SweepAxis::N:
            p.spec = symbol::SymbolSpec(base.spec.c2(), v);
            break;
        case SweepAxis::c2:
            p.spec = symbol::SymbolSpec(v, base.spec.coupling());
            break;
        case SweepAxis::a:
            p.a = v;
            break;
    }
    p.validate();
    return p;
}

}  // namespace

std::vector<SweepRow> sweep(const CrackProblem& base, const kernel::KernelSettings& settings,
                            SweepAxis axis, const std::vector<double>& values, std::size_t n) {
    settings.validate();
    if (n < 50) throw ParameterError("crack solve needs n >= 50 panels");
    std::vector<CrackProblem> problems;
    problems.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        try {
            problems.push_back(with_value(base, axis, values[i]));
        } catch (const ParameterError& e) {
            throw ParameterError("sweep value #" + std::to_string(i) + " (" +
                                 std::string(axis_name(axis)) + " = " + std::to_string(values[i]) +
                                 "): " + e.what());
        }
    }

    std::vector<SweepRow> rows(values.size());
    parallel_for(values.size(), [&](std::size_t i) {
        const CrackSolution sol = crack_opening(problems[i], settings, n);
        rows[i] = SweepRow{values[i], scf(sol), n, sol.solution.residual_norm};
    });
    return rows;
}

}  // namespace voidcrack::crack
