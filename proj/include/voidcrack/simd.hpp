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

// Data-parallel inner loops. Every kernel has a portable scalar reference in
// voidcrack::simd::scalar and, on x86-64, an AVX2+FMA variant in
// voidcrack::simd::avx2. The free functions in voidcrack::simd dispatch to the
// best variant the running CPU supports; VOIDCRACK_SIMD=scalar in the
// environment forces the reference path.

#include <span>
#include <string_view>

namespace voidcrack::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Best instruction set supported by both the build and the running CPU.
Isa detected_isa() noexcept;

/// Instruction set currently used by the dispatching entry points.
Isa active_isa() noexcept;

/// Overrides the dispatch target; requesting an unsupported ISA falls back to
/// scalar. Returns the ISA actually selected.
Isa select_isa(Isa isa) noexcept;

/// Restores the previous ISA on scope exit. Intended for tests.
class ScopedIsa {
public:
    explicit ScopedIsa(Isa isa) noexcept : previous_(active_isa()) { select_isa(isa); }
    ~ScopedIsa() { select_isa(previous_); }
    ScopedIsa(const ScopedIsa&) = delete;
    ScopedIsa& operator=(const ScopedIsa&) = delete;

private:
    Isa previous_;
};

/// sum_k weights[k] * cos(nodes[k] * x)
double cosine_sum(std::span<const double> nodes, std::span<const double> weights, double x);

/// out[j] = 1/(x - nodes[j+1]) - 1/(x - nodes[j]) for j < out.size().
/// `nodes` must hold out.size() + 1 entries.
void characteristic_row(double x, std::span<const double> nodes, std::span<double> out);

/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

double dot(std::span<const double> a, std::span<const double> b);

namespace scalar {
double cosine_sum(std::span<const double> nodes, std::span<const double> weights, double x);
void characteristic_row(double x, std::span<const double> nodes, std::span<double> out);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

#if defined(VOIDCRACK_HAVE_AVX2)
namespace avx2 {
double cosine_sum(std::span<const double> nodes, std::span<const double> weights, double x);
void characteristic_row(double x, std::span<const double> nodes, std::span<double> out);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);

/// Vectorized cosine used by cosine_sum; exposed for accuracy tests.
void cos_batch(std::span<const double> in, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace voidcrack::simd
