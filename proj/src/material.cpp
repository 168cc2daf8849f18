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

#include "voidcrack/material.hpp"

#include <cmath>
#include <string>

#include "voidcrack/error.hpp"

namespace voidcrack::material {

DimensionlessGroups derive_groups(const MaterialParams& p) {
    if (!(p.mu > 0.0)) throw ParameterError("shear modulus mu must be positive");
    const double longitudinal = p.lambda + 2.0 * p.mu;
    if (!(longitudinal > 0.0)) throw ParameterError("lambda + 2 mu must be positive");
    if (!(p.lambda + p.mu > 0.0)) {
        throw ParameterError("lambda + mu must be positive (requires c2 < 1)");
    }
    if (!(p.alpha > 0.0)) throw ParameterError("porosity constant alpha must be positive");
    if (!(p.xi > 0.0)) throw ParameterError("porosity constant xi must be positive");
    if (!(p.beta >= 0.0)) throw ParameterError("porosity coupling beta must be non-negative");

    DimensionlessGroups g;
    g.c2 = p.mu / longitudinal;
    g.H = p.beta / longitudinal;
    const double l2sq = p.alpha / p.xi;
    g.l2 = std::sqrt(l2sq);
    if (p.beta > 0.0) {
        const double l1sq = p.alpha / p.beta;
        g.l1 = std::sqrt(l1sq);
        g.N = (l2sq / l1sq) * g.H;
    } else {
        g.N = 0.0;
    }
    if (!(g.N >= 0.0 && g.N < 1.0)) {
        throw ParameterError("coupling number out of range: N = " + std::to_string(g.N) +
                             " (require 0 <= N < 1)");
    }

    if (p.thermal) {
        if (!(p.thermal->m >= 0.0)) {
            throw ParameterError("thermal porosity coupling m must be non-negative");
        }
        g.B = p.thermal->b / longitudinal;
        if (p.thermal->m > 0.0) g.l3 = std::sqrt(p.alpha / p.thermal->m);
    }
    return g;
}

double coupling_number_direct(const MaterialParams& p) {
    return p.beta * p.beta / (p.xi * (p.lambda + 2.0 * p.mu));
}

NormalizedStress stress_plane_strain(const PlaneStrainState& s, const DimensionlessGroups& g) {
    const double dux_dx = s.grad_u[0][0];
    const double dux_dy = s.grad_u[0][1];
    const double duy_dx = s.grad_u[1][0];
    const double duy_dy = s.grad_u[1][1];
    const double lateral = 1.0 - 2.0 * g.c2;

    NormalizedStress out;
    out.sxx = dux_dx + lateral * duy_dy + g.H * s.phi;
    out.syy = lateral * dux_dx + duy_dy + g.H * s.phi;
    out.sxy = dux_dy + duy_dx;
    if (s.theta) {
        if (!g.B) throw ConfigurationError("temperature supplied but thermal group B is absent");
        const double thermal = *g.B * *s.theta;
        out.sxx -= thermal;
        out.syy -= thermal;
    }
    return out;
}

namespace {

struct Stencil {
    FieldSample c, e, w, n, s, ne, nw, se, sw;
};

double value_of(const FieldSample& f, int which) {
    switch (which) {
        case 0:
            return f.ux;
        case 1:
            return f.uy;
        case 2:
            return f.phi;
        default:
            return f.theta.value_or(0.0);
    }
}

}  // namespace

FieldResidual pde_residual(const FieldSampler& field, const DimensionlessGroups& g, double x,
                           double y, double h) {
    if (!(h > 0.0)) throw ParameterError("finite-difference step h must be positive");
    Stencil st{field(x, y),         field(x + h, y),     field(x - h, y),
               field(x, y + h),     field(x, y - h),     field(x + h, y + h),
               field(x - h, y + h), field(x + h, y - h), field(x - h, y - h)};

    const double h2 = h * h;
    auto dxx = [&](int f) { return (value_of(st.e, f) - 2.0 * value_of(st.c, f) + value_of(st.w, f)) / h2; };
    auto dyy = [&](int f) { return (value_of(st.n, f) - 2.0 * value_of(st.c, f) + value_of(st.s, f)) / h2; };
    auto dxy = [&](int f) {
        return (value_of(st.ne, f) - value_of(st.nw, f) - value_of(st.se, f) + value_of(st.sw, f)) /
               (4.0 * h2);
    };
    auto dx = [&](int f) { return (value_of(st.e, f) - value_of(st.w, f)) / (2.0 * h); };
    auto dy = [&](int f) { return (value_of(st.n, f) - value_of(st.s, f)) / (2.0 * h); };

    constexpr int ux = 0, uy = 1, phi = 2, theta = 3;
    const double c2 = g.c2;
    const double divergence = dx(ux) + dy(uy);
    const double phi_c = st.c.phi;

    FieldResidual r;
    r.momentum_x = dxx(ux) + c2 * dyy(ux) + (1.0 - c2) * dxy(uy) + g.H * dx(phi);
    r.momentum_y = dyy(uy) + c2 * dxx(uy) + (1.0 - c2) * dxy(ux) + g.H * dy(phi);

    // With beta == 0 the l1 scaling is undefined; use the equivalent form
    // divided by xi: l2^2 lap(phi) - phi (+ (l2/l3)^2 theta).
    const double lead = g.l1 ? *g.l1 * *g.l1 : g.l2 * g.l2;
    const double phi_coeff = g.l1 ? lead / (g.l2 * g.l2) : 1.0;
    const double div_coeff = g.l1 ? 1.0 : 0.0;
    r.porosity = lead * (dxx(phi) + dyy(phi)) - phi_coeff * phi_c - div_coeff * divergence;

    if (st.c.theta) {
        if (!g.B) throw ConfigurationError("temperature field supplied but thermal group B is absent");
        r.momentum_x -= *g.B * dx(theta);
        r.momentum_y -= *g.B * dy(theta);
        if (g.l3) r.porosity += lead / (*g.l3 * *g.l3) * *st.c.theta;
        r.heat = dxx(theta) + dyy(theta);
    }
    return r;
}

}  // namespace voidcrack::material
