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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "voidcrack/error.hpp"
#include "voidcrack/symbol.hpp"

using namespace voidcrack;
using symbol::SymbolSpec;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

// L(s) evaluated literally from its definition in 50-digit arithmetic.
mp L_mp(double c2, double N, mp s) {
    const mp n = N, c = c2;
    const mp q = sqrt(s * s + 1 - n);
    return s / q * (2 * n * c * s * s * (q - s) + (1 - n) * (1 - n - c) * q);
}

mp c0_mp(double c2, double N) {
    const mp e = 1 - mp(N);
    return e * e * (1 - mp(c2));
}

mp c1_mp(double c2, double N) {
    const mp e = 1 - mp(N);
    return -mp(3) / 4 * mp(N) * mp(c2) * e * e;
}

}  // namespace

TEST_CASE("symbol construction enforces the admissible ranges") {
    CHECK_NOTHROW(SymbolSpec(0.2, 0.0));
    CHECK_THROWS_AS(SymbolSpec(0.0, 0.5), ParameterError);
    CHECK_THROWS_AS(SymbolSpec(1.0, 0.5), ParameterError);
    CHECK_THROWS_AS(SymbolSpec(0.2, -0.1), ParameterError);
    try {
        SymbolSpec(0.2, 1.0);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("coupling number out of range") != std::string::npos);
    }
}

TEST_CASE("q and L on hand-computed values") {
    CHECK(symbol::q(SymbolSpec(0.2, 0.36), 0.0) == doctest::Approx(0.8));
    CHECK(symbol::q(SymbolSpec(0.2, 0.0), 1.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(symbol::q(SymbolSpec(0.2, 0.5), 2.0) == doctest::Approx(2.1213203));
    CHECK(symbol::L(SymbolSpec(0.2, 0.5), 0.0) == 0.0);
    CHECK(symbol::L(SymbolSpec(0.2, 0.0), 2.0) == doctest::Approx(1.6));
    CHECK(symbol::L(SymbolSpec(0.2, 0.5), 1.0) == doctest::Approx(0.1867008).epsilon(1e-6));
}

TEST_CASE("asymptotic coefficients") {
    CHECK(symbol::asymptote_c0(SymbolSpec(0.2, 0.0)) == doctest::Approx(0.8));
    CHECK(symbol::asymptote_c0(SymbolSpec(0.2, 0.5)) == doctest::Approx(0.2));
    CHECK(symbol::asymptote_c0(SymbolSpec(0.2, 1.0 - 1e-9)) < 1e-17);
    CHECK(symbol::asymptote_c1(SymbolSpec(0.2, 0.0)) == 0.0);
    CHECK(symbol::asymptote_c3(SymbolSpec(0.7, 0.0)) == 0.0);

    for (double N : {0.2, 0.5, 0.8, 0.9}) {
        for (double c2 : {0.1, 0.2, 0.5}) {
            const SymbolSpec spec(c2, N);
            const mp c0 = c0_mp(c2, N);
            // Numerical limit of s (L - c0 s) at s = 1e4; the next term is
            // O(1/s^2), far below the 1e-6 acceptance.
            const mp s = 1e4;
            const mp limit1 = s * (L_mp(c2, N, s) - c0 * s);
            const double c1 = symbol::asymptote_c1(spec);
            CHECK(c1 == doctest::Approx(static_cast<double>(limit1)).epsilon(1e-6));

            // Next order: s^3 (L - c0 s - c1/s) -> c3.
            const mp s3 = 1e3;
            const mp limit3 = s3 * s3 * s3 * (L_mp(c2, N, s3) - c0 * s3 - c1_mp(c2, N) / s3);
            CHECK(symbol::asymptote_c3(spec) == doctest::Approx(static_cast<double>(limit3)).epsilon(1e-4));
        }
    }
}

TEST_CASE("cancellation-free remainder agrees with extended precision") {
    for (double N : {0.1, 0.5, 0.9}) {
        for (double c2 : {0.2, 0.6}) {
            const SymbolSpec spec(c2, N);
            const mp c0 = c0_mp(c2, N);
            for (double s : {0.0, 1e-3, 0.3, 1.0, 7.0, 100.0, 1e4, 1e6, 1e9}) {
                const double ref = static_cast<double>(L_mp(c2, N, s) - c0 * s);
                const double got = symbol::remainder(spec, s);
                INFO("N=" << N << " c2=" << c2 << " s=" << s);
                if (s == 0.0) {
                    CHECK(got == 0.0);
                } else {
                    CHECK(std::abs(got - ref) <= 1e-12 * std::abs(ref));
                }
                CHECK(symbol::L(spec, s) ==
                      doctest::Approx(static_cast<double>(L_mp(c2, N, s))).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("q properties on dense samples") {
    for (double N : {0.0, 0.3, 0.95}) {
        const SymbolSpec spec(0.2, N);
        double previous = symbol::q_minus_s(spec, 0.0);
        for (double s = 1e-3; s <= 1e6; s *= 1.05) {
            const double q = symbol::q(spec, s);
            CHECK(q >= std::max(s, std::sqrt(1.0 - N)));
            const double d = symbol::q_minus_s(spec, s);
            CHECK(d < previous);
            CHECK(d > 0.0);
            previous = d;
        }
    }
}

TEST_CASE("asymptotic sandwich and the classical reduction") {
    for (double N : {0.2, 0.5, 0.8}) {
        for (double c2 : {0.1, 0.2, 0.5}) {
            const SymbolSpec spec(c2, N);
            const double c0 = symbol::asymptote_c0(spec);
            const double c1 = symbol::asymptote_c1(spec);
            for (double s : {1e2, 3e2, 1e3, 1e4, 1e5}) {
                CHECK(std::abs(symbol::L(spec, s) / s - c0) <= std::abs(c1) / (s * s) * 1.5);
            }
        }
    }
    for (double c2 : {0.05, 0.2, 0.9}) {
        const SymbolSpec spec(c2, 0.0);
        for (double s : {0.0, 0.5, 2.0, 1e3, 1e8}) {
            CHECK(symbol::L(spec, s) == doctest::Approx((1.0 - c2) * s).epsilon(1e-15));
            CHECK(symbol::remainder(spec, s) == 0.0);
        }
    }
}

TEST_CASE("L is positive when c2 < 1 - N") {
    for (double N : {0.1, 0.5, 0.7}) {
        const SymbolSpec spec(0.25, N);
        for (double s = 1e-4; s < 1e4; s *= 1.3) CHECK(symbol::L(spec, s) > 0.0);
    }
}
