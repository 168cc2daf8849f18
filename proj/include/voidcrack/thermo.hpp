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

// Thermal loading of the crack by a prescribed temperature flux f0 on its
// faces. The harmonic half-plane temperature has the boundary trace
//
//   theta(x, 0) = -(1/pi) int_{-a}^{a} f0(xi) ln|x - xi| dxi + C,
//
// which enters the crack equation through the -B theta term of the stress
// law. The constant C is not determined by the flux data (a non-zero net flux
// makes theta grow logarithmically at infinity), so traces are reported
// relative to the crack centre: theta(0, 0) = 0. The crack kernel is left
// unchanged by the thermal coupling.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "voidcrack/crack.hpp"
#include "voidcrack/hsie.hpp"
#include "voidcrack/kernel.hpp"

namespace voidcrack::thermo {

/// Normal temperature flux on |x| < a; zero elsewhere on the line y = 0.
class FluxProfile {
public:
    static FluxProfile constant(double a, double value);

    /// Piecewise-linear interpolation of (xs, fs); zero outside [xs.front(),
    /// xs.back()]. xs must be strictly increasing with at least two entries.
    static FluxProfile piecewise_linear(double a, std::vector<double> xs, std::vector<double> fs);

    /// Arbitrary profile; `kinks` lists points where f0 is not smooth.
    static FluxProfile function(double a, std::function<double(double)> f0,
                                std::vector<double> kinks = {});

    double half_length() const noexcept { return a_; }
    double operator()(double x) const;

    /// -a, a and every interior kink, sorted.
    const std::vector<double>& breakpoints() const noexcept { return breaks_; }

    bool identically_zero() const noexcept { return zero_; }

    /// int_{-a}^{a} f0
    double net_flux() const;

    /// int_{-a}^{a} |f0|
    double total_flux() const;

private:
    FluxProfile(double a, std::function<double(double)> f0, std::vector<double> kinks, bool zero);

    double a_;
    std::function<double(double)> f0_;
    std::vector<double> breaks_;
    bool zero_;
};

/// -(1/pi) int f0(xi) ln|x - xi| dxi with C = 0.
double theta_raw(const FluxProfile& flux, double x, double rel_tol = 1e-13);

/// theta(x, 0) - theta(0, 0).
double theta_trace(const FluxProfile& flux, double x, double rel_tol = 1e-13);

/// Half-plane field -(1/pi) int f0(xi) ln sqrt((x - xi)^2 + y^2) dxi, y != 0.
double theta_field(const FluxProfile& flux, double x, double y, double rel_tol = 1e-13);

/// True when the net flux is not negligible against the total flux; theta then
/// grows logarithmically at infinity and only its variation is meaningful.
bool net_flux_warning(const FluxProfile& flux);

struct ThermoCrackProblem {
    crack::CrackProblem base;
    std::optional<double> B;  ///< thermal group b / (lambda + 2 mu)
    FluxProfile flux = FluxProfile::constant(1.0, 0.0);

    /// Throws ConfigurationError without B or when the flux half-length
    /// differs from the crack's; ParameterError for an invalid base.
    void validate() const;
};

/// (lambda + 2 mu)/(2 mu) = 1/(2 c2): converts B theta to the load scale.
double thermal_load_factor(const symbol::SymbolSpec& spec);

enum class LoadParts { mechanical, thermal, both };

/// Crack problem with right-hand side pi [load + kB B theta(x)] / (1 - c2),
/// restricted to the requested parts of the load.
hsie::HsieProblem thermo_rhs(const ThermoCrackProblem& problem,
                             const kernel::KernelSettings& settings,
                             LoadParts parts = LoadParts::both);

crack::CrackSolution thermo_opening(const ThermoCrackProblem& problem,
                                    const kernel::KernelSettings& settings, std::size_t n,
                                    LoadParts parts = LoadParts::both);

struct ThermoScfResult {
    crack::ScfResult scf;
    double B = 0;
    double load_factor = 0;  ///< 1/(2 c2)
    double net_flux = 0;
    bool net_flux_warning = false;
    bool thermal_active = false;  ///< B != 0 and f0 not identically zero
    double residual_norm = 0;
};

ThermoScfResult thermo_scf(const ThermoCrackProblem& problem,
                           const kernel::KernelSettings& settings, std::size_t n);

}  // namespace voidcrack::thermo
