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

#include "voidcrack/symbol.hpp"

#include <cmath>
#include <string>

#include "voidcrack/error.hpp"

namespace voidcrack::symbol {

SymbolSpec::SymbolSpec(double c2, double N) : c2_(c2), n_(N) {
    if (!(c2 > 0.0 && c2 < 1.0)) {
        throw ParameterError("c2 out of range: " + std::to_string(c2) + " (require 0 < c2 < 1)");
    }
    if (!(N >= 0.0 && N < 1.0)) {
        throw ParameterError("coupling number out of range: N = " + std::to_string(N) +
                             " (require 0 <= N < 1)");
    }
}

double q(const SymbolSpec& spec, double s) { return std::sqrt(s * s + (1.0 - spec.coupling())); }

double q_minus_s(const SymbolSpec& spec, double s) {
    return (1.0 - spec.coupling()) / (q(spec, s) + s);
}

double L(const SymbolSpec& spec, double s) {
    const double N = spec.coupling();
    const double c2 = spec.c2();
    const double e = 1.0 - N;
    const double qs = q(spec, s);
    return s / qs * (2.0 * N * c2 * s * s * q_minus_s(spec, s) + e * (e - c2) * qs);
}

double remainder(const SymbolSpec& spec, double s) {
    const double e = 1.0 - spec.coupling();
    const double qs = q(spec, s);
    const double qps = qs + s;
    return -spec.coupling() * spec.c2() * e * e * s * (qs + 2.0 * s) / (qs * qps * qps);
}

double asymptote_c0(const SymbolSpec& spec) {
    const double e = 1.0 - spec.coupling();
    return e * e * (1.0 - spec.c2());
}

double asymptote_c1(const SymbolSpec& spec) {
    const double e = 1.0 - spec.coupling();
    return -0.75 * spec.coupling() * spec.c2() * e * e;
}

double asymptote_c3(const SymbolSpec& spec) {
    const double e = 1.0 - spec.coupling();
    return 0.625 * spec.coupling() * spec.c2() * e * e * e;
}

}  // namespace voidcrack::symbol
