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

// Cowin–Nunziato elastic material with voids in plane strain: physical
// constants, derived dimensionless groups, normalized stresses, and a
// finite-difference residual of the plane field equations (optionally with
// the thermoelastic coupling).

#include <array>
#include <functional>
#include <optional>

namespace voidcrack::material {

struct ThermalConstants {
    double b = 0.0;  ///< thermal stress coupling
    double m = 0.0;  ///< thermal porosity coupling
};

struct MaterialParams {
    double lambda = 0.0;
    double mu = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double xi = 0.0;
    std::optional<ThermalConstants> thermal;
};

struct DimensionlessGroups {
    double c2 = 0.0;  ///< mu / (lambda + 2 mu)
    double H = 0.0;   ///< beta / (lambda + 2 mu)
    double N = 0.0;   ///< coupling number (l2^2 / l1^2) H
    std::optional<double> l1;  ///< sqrt(alpha/beta); absent when beta == 0
    double l2 = 0.0;           ///< sqrt(alpha/xi)
    std::optional<double> B;   ///< b / (lambda + 2 mu)
    std::optional<double> l3;  ///< sqrt(alpha/m); absent when m == 0 or no thermal constants
};

/// Throws ParameterError with a distinct message for each violated condition.
DimensionlessGroups derive_groups(const MaterialParams& params);

/// Coupling number computed directly as beta^2 / (xi (lambda + 2 mu)).
double coupling_number_direct(const MaterialParams& params);

struct PlaneStrainState {
    /// grad_u[i][j] = d u_i / d x_j with i, j in {x, y}.
    std::array<std::array<double, 2>, 2> grad_u{};
    double phi = 0.0;
    std::optional<double> theta;
};

/// sxx, syy normalized by lambda + 2 mu; sxy normalized by mu.
struct NormalizedStress {
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
};

NormalizedStress stress_plane_strain(const PlaneStrainState& state, const DimensionlessGroups& groups);

struct FieldSample {
    double ux = 0.0;
    double uy = 0.0;
    double phi = 0.0;
    std::optional<double> theta;
};

using FieldSampler = std::function<FieldSample(double x, double y)>;

struct FieldResidual {
    double momentum_x = 0.0;
    double momentum_y = 0.0;
    double porosity = 0.0;
    std::optional<double> heat;  ///< Laplacian of theta, present for thermal fields
};

/// Left-hand sides of the plane field equations at (x, y) from second-order
/// central differences with step h. Thermal terms are included when the
/// sampler returns theta, which then requires B and l3 in `groups`.
FieldResidual pde_residual(const FieldSampler& field, const DimensionlessGroups& groups, double x,
                           double y, double h = 1e-4);

}  // namespace voidcrack::material
