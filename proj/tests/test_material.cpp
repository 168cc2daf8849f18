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

#include <doctest.h>

#include <cmath>
#include <string>

#include "voidcrack/error.hpp"
#include "voidcrack/material.hpp"

using namespace voidcrack;
using namespace voidcrack::material;

namespace {

std::string message_of(const MaterialParams& p) {
    try {
        derive_groups(p);
    } catch (const ParameterError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("derive_groups on hand-computed inputs") {
    SUBCASE("uncoupled beta = 0") {
        const auto g = derive_groups({3, 1, 1, 0, 1, {}});
        CHECK(g.c2 == doctest::Approx(0.2));
        CHECK(g.H == 0.0);
        CHECK(g.N == 0.0);
        CHECK_FALSE(g.l1.has_value());
        CHECK(g.l2 == doctest::Approx(1.0));
        CHECK_FALSE(g.B.has_value());
    }
    SUBCASE("coupled") {
        const auto g = derive_groups({3, 1, 2, 1, 0.5, {}});
        CHECK(g.c2 == doctest::Approx(0.2));
        CHECK(g.H == doctest::Approx(0.2));
        CHECK(*g.l1 * *g.l1 == doctest::Approx(2.0));
        CHECK(g.l2 * g.l2 == doctest::Approx(4.0));
        CHECK(g.N == doctest::Approx(0.4));
    }
    SUBCASE("thermal groups") {
        const auto g = derive_groups({3, 1, 2, 1, 0.5, ThermalConstants{0.5, 8.0}});
        CHECK(*g.B == doctest::Approx(0.1));
        CHECK(*g.l3 == doctest::Approx(0.5));
        const auto no_m = derive_groups({3, 1, 2, 1, 0.5, ThermalConstants{0.5, 0.0}});
        CHECK_FALSE(no_m.l3.has_value());
    }
}

TEST_CASE("derive_groups rejects inadmissible constants with distinct messages") {
    const std::string coupling = message_of({3, 1, 1, 3, 1, {}});
    CHECK(coupling.find("coupling number out of range") != std::string::npos);

    const std::string messages[] = {
        message_of({3, 0, 1, 0, 1, {}}),    // mu
        message_of({-3, 1, 1, 0, 1, {}}),   // lambda + 2 mu
        message_of({-1.5, 1, 1, 0, 1, {}}), // lambda + mu
        message_of({3, 1, 0, 0, 1, {}}),    // alpha
        message_of({3, 1, 1, 0, 0, {}}),    // xi
        message_of({3, 1, 1, -1, 1, {}}),   // beta
        coupling,
        message_of({3, 1, 1, 0, 1, ThermalConstants{1, -1}}),
    };
    for (std::size_t i = 0; i < std::size(messages); ++i) {
        CHECK_FALSE(messages[i].empty());
        for (std::size_t j = 0; j < i; ++j) CHECK(messages[i] != messages[j]);
    }
}

TEST_CASE("coupling number two ways") {
    for (const MaterialParams& p : {MaterialParams{3, 1, 2, 1, 0.5, {}}, MaterialParams{1.7, 0.9, 0.3, 0.21, 0.8, {}},
                                    MaterialParams{10, 4, 5, 2.5, 3, {}}}) {
        const auto g = derive_groups(p);
        CHECK(g.N == doctest::Approx(coupling_number_direct(p)).epsilon(1e-14));
    }
}

TEST_CASE("groups are invariant under a common rescaling of the constants") {
    const MaterialParams base{1.7, 0.9, 0.3, 0.21, 0.8, ThermalConstants{0.4, 0.2}};
    const auto g0 = derive_groups(base);
    auto scaled = [&](double t) {
        MaterialParams p = base;
        p.lambda *= t;
        p.mu *= t;
        p.beta *= t;
        p.alpha *= t;
        p.xi *= t;
        p.thermal->b *= t;
        p.thermal->m *= t;
        return derive_groups(p);
    };
    // Powers of two scale without rounding, so equality is exact.
    for (double t : {0.25, 2.0, 1024.0}) {
        const auto g = scaled(t);
        CHECK(g.c2 == g0.c2);
        CHECK(g.H == g0.H);
        CHECK(g.N == g0.N);
        CHECK(*g.B == *g0.B);
        CHECK(*g.l1 == *g0.l1);
        CHECK(g.l2 == g0.l2);
        CHECK(*g.l3 == *g0.l3);
    }
    // Other factors agree to rounding.
    for (double t : {3.0, 0.7, 1e6}) {
        const auto g = scaled(t);
        CHECK(g.c2 == doctest::Approx(g0.c2).epsilon(1e-15));
        CHECK(g.N == doctest::Approx(g0.N).epsilon(1e-15));
        CHECK(*g.B == doctest::Approx(*g0.B).epsilon(1e-15));
    }
}

TEST_CASE("stress_plane_strain") {
    DimensionlessGroups g;
    g.c2 = 0.2;
    g.H = 0.2;

    CHECK(stress_plane_strain({}, g).sxx == 0.0);

    PlaneStrainState s;
    s.grad_u = {{{1.0, 0.0}, {0.0, -1.0}}};
    auto r = stress_plane_strain(s, g);
    CHECK(r.sxx == doctest::Approx(0.4));
    CHECK(r.syy == doctest::Approx(-0.4));
    CHECK(r.sxy == 0.0);

    PlaneStrainState p;
    p.phi = 2.0;
    r = stress_plane_strain(p, g);
    CHECK(r.sxx == doctest::Approx(0.4));
    CHECK(r.syy == doctest::Approx(0.4));

    PlaneStrainState shear;
    shear.grad_u = {{{0.0, 0.3}, {0.5, 0.0}}};
    CHECK(stress_plane_strain(shear, g).sxy == doctest::Approx(0.8));

    SUBCASE("thermal term") {
        PlaneStrainState t = s;
        t.theta = 0.0;
        CHECK_THROWS_AS(stress_plane_strain(t, g), ConfigurationError);
        g.B = 0.3;
        const auto elastic = stress_plane_strain(s, g);
        const auto zero_theta = stress_plane_strain(t, g);
        CHECK(zero_theta.sxx == elastic.sxx);
        CHECK(zero_theta.syy == elastic.syy);
        CHECK(zero_theta.sxy == elastic.sxy);
        t.theta = 2.0;
        const auto hot = stress_plane_strain(t, g);
        CHECK(hot.sxx == doctest::Approx(elastic.sxx - 0.6));
        CHECK(hot.syy == doctest::Approx(elastic.syy - 0.6));
        CHECK(hot.sxy == elastic.sxy);
    }
}

TEST_CASE("pde_residual on simple fields") {
    const auto g = derive_groups({3, 1, 2, 1, 0.5, ThermalConstants{0.5, 8.0}});

    SUBCASE("linear divergence-free field") {
        auto field = [](double x, double y) { return FieldSample{x, -y, 0.0, {}}; };
        const auto r = pde_residual(field, g, 0.3, -0.7);
        CHECK(std::abs(r.momentum_x) < 1e-10);
        CHECK(std::abs(r.momentum_y) < 1e-10);
        CHECK(std::abs(r.porosity) < 1e-10);
        CHECK_FALSE(r.heat.has_value());
    }
    SUBCASE("constant porosity") {
        const double phi0 = 0.75;
        auto field = [phi0](double, double) { return FieldSample{0, 0, phi0, {}}; };
        const auto r = pde_residual(field, g, 1.0, 2.0);
        CHECK(r.momentum_x == 0.0);
        CHECK(r.momentum_y == 0.0);
        const double l1sq = *g.l1 * *g.l1;
        CHECK(r.porosity == doctest::Approx(-(l1sq / (g.l2 * g.l2)) * phi0).epsilon(1e-12));
    }
    SUBCASE("harmonic temperature xy") {
        auto field = [](double x, double y) { return FieldSample{0, 0, 0, x * y}; };
        const double x = 0.4, y = -1.1;
        const auto r = pde_residual(field, g, x, y);
        CHECK(r.momentum_x == doctest::Approx(-*g.B * y).epsilon(1e-9));
        CHECK(r.momentum_y == doctest::Approx(-*g.B * x).epsilon(1e-9));
        CHECK(std::abs(*r.heat) < 1e-6);
        const double l1sq = *g.l1 * *g.l1;
        CHECK(r.porosity == doctest::Approx(l1sq / (*g.l3 * *g.l3) * x * y).epsilon(1e-9));
    }
    SUBCASE("temperature without B is a configuration error") {
        const auto elastic = derive_groups({3, 1, 2, 1, 0.5, {}});
        auto field = [](double x, double y) { return FieldSample{0, 0, 0, x * y}; };
        CHECK_THROWS_AS(pde_residual(field, elastic, 0, 0), ConfigurationError);
    }
    SUBCASE("non-positive step") {
        auto field = [](double, double) { return FieldSample{}; };
        CHECK_THROWS_AS(pde_residual(field, g, 0, 0, 0.0), ParameterError);
    }
}

TEST_CASE("pde_residual matches hand-derived residuals with second-order accuracy") {
    const auto g = derive_groups({1.7, 0.9, 0.3, 0.21, 0.8, {}});
    const double c2 = g.c2, H = g.H, l1sq = *g.l1 * *g.l1, l2sq = g.l2 * g.l2;
    // u_x = sin x cos 2y, u_y = x^2 y, phi = e^x y
    auto field = [](double x, double y) {
        return FieldSample{std::sin(x) * std::cos(2 * y), x * x * y, std::exp(x) * y, {}};
    };
    const double x = 0.6, y = 0.35;
    const double exact1 = -std::sin(x) * std::cos(2 * y) - 4 * c2 * std::sin(x) * std::cos(2 * y) +
                          (1 - c2) * 2 * x + H * std::exp(x) * y;
    const double exact2 = c2 * 2 * y + (1 - c2) * (-2 * std::cos(x) * std::sin(2 * y)) + H * std::exp(x);
    const double exact3 = l1sq * std::exp(x) * y - (l1sq / l2sq) * std::exp(x) * y -
                          (std::cos(x) * std::cos(2 * y) + x * x);

    const auto coarse = pde_residual(field, g, x, y, 2e-3);
    const auto fine = pde_residual(field, g, x, y, 1e-3);
    CHECK(fine.momentum_x == doctest::Approx(exact1).epsilon(1e-5));
    CHECK(fine.momentum_y == doctest::Approx(exact2).epsilon(1e-5));
    CHECK(fine.porosity == doctest::Approx(exact3).epsilon(1e-5));
    // Halving h divides the error by about four.
    const double e_coarse = std::abs(coarse.momentum_x - exact1);
    const double e_fine = std::abs(fine.momentum_x - exact1);
    CHECK(e_coarse / e_fine == doctest::Approx(4.0).epsilon(0.05));
}
