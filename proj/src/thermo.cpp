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

#include "voidcrack/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "voidcrack/error.hpp"
#include "voidcrack/quadrature.hpp"

namespace voidcrack::thermo {

using std::numbers::pi;

FluxProfile::FluxProfile(double a, std::function<double(double)> f0, std::vector<double> kinks,
                         bool zero)
    : a_(a), f0_(std::move(f0)), zero_(zero) {
    if (!(a > 0.0)) throw ParameterError("flux half-length a must be positive");
    breaks_.push_back(-a);
    for (double k : kinks) {
        if (k > -a && k < a) breaks_.push_back(k);
    }
    breaks_.push_back(a);
    std::sort(breaks_.begin(), breaks_.end());
    breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
}

FluxProfile FluxProfile::constant(double a, double value) {
    if (!std::isfinite(value)) throw ParameterError("flux value must be finite");
    return FluxProfile(a, [value](double) { return value; }, {}, value == 0.0);
}

FluxProfile FluxProfile::piecewise_linear(double a, std::vector<double> xs, std::vector<double> fs) {
    if (xs.size() < 2 || xs.size() != fs.size()) {
        throw ParameterError("piecewise-linear flux needs at least two (x, f0) pairs");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(fs[i])) {
            throw ParameterError("flux table entry " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && !(xs[i] > xs[i - 1])) {
            throw ParameterError("flux abscissae must be strictly increasing (entry " +
                                 std::to_string(i) + ")");
        }
    }
    const bool zero = std::all_of(fs.begin(), fs.end(), [](double v) { return v == 0.0; });
    auto interp = [xs, fs](double x) {
        if (x < xs.front() || x > xs.back()) return 0.0;
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        if (it == xs.end()) return fs.back();
        const std::size_t j = static_cast<std::size_t>(it - xs.begin());
        const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
        return (1.0 - w) * fs[j - 1] + w * fs[j];
    };
    return FluxProfile(a, interp, xs, zero);
}

FluxProfile FluxProfile::function(double a, std::function<double(double)> f0,
                                  std::vector<double> kinks) {
    if (!f0) throw ParameterError("flux function is empty");
    return FluxProfile(a, std::move(f0), std::move(kinks), false);
}

double FluxProfile::operator()(double x) const {
    if (zero_ || !(std::abs(x) < a_)) return 0.0;
    return f0_(x);
}

double FluxProfile::net_flux() const {
    if (zero_) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        sum += quadrature::adaptive(*this, breaks_[i], breaks_[i + 1], 1e-13, 1e-15);
    }
    return sum;
}

double FluxProfile::total_flux() const {
    if (zero_) return 0.0;
    auto f = [this](double x) { return std::abs((*this)(x)); };
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        sum += quadrature::adaptive(f, breaks_[i], breaks_[i + 1], 1e-13, 1e-15);
    }
    return sum;
}

namespace {

// int over the flux support of f0(xi) w(xi), where w may be log-singular at
// xi = x; the support is split at the kinks and at x.
template <class W>
double convolve(const FluxProfile& flux, double x, W weight, bool singular, double rel_tol) {
    if (flux.identically_zero()) return 0.0;
    std::vector<double> cuts = flux.breakpoints();
    if (x > cuts.front() && x < cuts.back()) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto f = [&](double xi) { return flux(xi) * weight(xi); };
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        if (singular && lo == x) {
            sum += quadrature::toward_singularity(f, lo, hi, rel_tol);
        } else if (singular && hi == x) {
            sum -= quadrature::toward_singularity(f, hi, lo, rel_tol);
        } else {
            sum += quadrature::adaptive(f, lo, hi, rel_tol, 1e-16);
        }
    }
    return sum;
}

}  // namespace

double theta_raw(const FluxProfile& flux, double x, double rel_tol) {
    auto w = [x](double xi) { return std::log(std::abs(x - xi)); };
    return -convolve(flux, x, w, true, rel_tol) / pi;
}

double theta_trace(const FluxProfile& flux, double x, double rel_tol) {
    if (flux.identically_zero()) return 0.0;
    return theta_raw(flux, x, rel_tol) - theta_raw(flux, 0.0, rel_tol);
}

double theta_field(const FluxProfile& flux, double x, double y, double rel_tol) {
    if (y == 0.0) throw DomainError("theta_field needs y != 0; use theta_raw on the crack line");
    const double y2 = y * y;
    auto w = [x, y2](double xi) { return 0.5 * std::log((x - xi) * (x - xi) + y2); };
    return -convolve(flux, x, w, false, rel_tol) / pi;
}

bool net_flux_warning(const FluxProfile& flux) {
    if (flux.identically_zero()) return false;
    return std::abs(flux.net_flux()) > 1e-9 * flux.total_flux();
}

void ThermoCrackProblem::validate() const {
    base.validate();
    if (!B) throw ConfigurationError("thermal problem needs the thermal group B");
    if (!std::isfinite(*B)) throw ParameterError("thermal group B must be finite");
    if (flux.half_length() != base.a) {
        throw ConfigurationError("flux half-length differs from the crack half-length");
    }
}

double thermal_load_factor(const symbol::SymbolSpec& spec) { return 0.5 / spec.c2(); }

hsie::HsieProblem thermo_rhs(const ThermoCrackProblem& problem,
                             const kernel::KernelSettings& settings, LoadParts parts) {
    problem.validate();
    hsie::HsieProblem out = crack::assemble(problem.base, settings);
    const bool thermal = parts != LoadParts::mechanical && *problem.B != 0.0 &&
                         !problem.flux.identically_zero();
    const double load = parts == LoadParts::thermal ? 0.0 : problem.base.load;
    const double lateral = 1.0 - problem.base.spec.c2();
    if (!thermal) {
        out.rhs = [f = pi * load / lateral](double) { return f; };
        return out;
    }
    const double coupling = thermal_load_factor(problem.base.spec) * *problem.B;
    out.rhs = [flux = problem.flux, load, coupling, lateral](double x) {
        return pi * (load + coupling * theta_trace(flux, x)) / lateral;
    };
    return out;
}

crack::CrackSolution thermo_opening(const ThermoCrackProblem& problem,
                                    const kernel::KernelSettings& settings, std::size_t n,
                                    LoadParts parts) {
    return crack::solve_assembled(problem.base, thermo_rhs(problem, settings, parts), n);
}

ThermoScfResult thermo_scf(const ThermoCrackProblem& problem,
                           const kernel::KernelSettings& settings, std::size_t n) {
    const crack::CrackSolution sol = thermo_opening(problem, settings, n);
    ThermoScfResult r;
    r.scf = crack::scf(sol);
    r.B = *problem.B;
    r.load_factor = thermal_load_factor(problem.base.spec);
    r.net_flux = problem.flux.net_flux();
    r.net_flux_warning = net_flux_warning(problem.flux);
    r.thermal_active = r.B != 0.0 && !problem.flux.identically_zero();
    r.residual_norm = sol.solution.residual_norm;
    return r;
}

}  // namespace voidcrack::thermo
