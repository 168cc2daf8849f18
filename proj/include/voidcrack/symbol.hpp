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

// Fourier symbol of the crack kernel,
//   q(s) = sqrt(s^2 + 1 - N),
//   L(s) = s/q [2 N c2 s^2 (q - s) + (1 - N)(1 - N - c2) q],
// and its large-s expansion L(s) = c0 s + c1/s + c3/s^3 + O(s^-5).

namespace voidcrack::symbol {

class SymbolSpec {
public:
    /// Throws ParameterError unless 0 < c2 < 1 and 0 <= N < 1.
    SymbolSpec(double c2, double N);

    double c2() const noexcept { return c2_; }
    double coupling() const noexcept { return n_; }

    friend bool operator==(const SymbolSpec&, const SymbolSpec&) = default;

private:
    double c2_;
    double n_;
};

double q(const SymbolSpec& spec, double s);

/// q(s) - s, evaluated as (1 - N)/(q + s) to avoid cancellation.
double q_minus_s(const SymbolSpec& spec, double s);

double L(const SymbolSpec& spec, double s);

/// L(s) - c0 s in closed form, -N c2 (1-N)^2 s (q + 2s) / (q (q + s)^2),
/// free of the cancellation a direct subtraction suffers at large s.
double remainder(const SymbolSpec& spec, double s);

/// (1 - N)^2 (1 - c2)
double asymptote_c0(const SymbolSpec& spec);

/// Coefficient of 1/s: -(3/4) N c2 (1 - N)^2.
double asymptote_c1(const SymbolSpec& spec);

/// Coefficient of 1/s^3: (5/8) N c2 (1 - N)^3.
double asymptote_c3(const SymbolSpec& spec);

}  // namespace voidcrack::symbol
