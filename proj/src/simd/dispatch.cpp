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

#include "voidcrack/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace voidcrack::simd {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(VOIDCRACK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() noexcept {
    const char* env = std::getenv("VOIDCRACK_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) {
        return Isa::scalar;
    }
    return detected_isa();
}

std::atomic<Isa>& current() noexcept {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::avx2:
            return "avx2";
        case Isa::scalar:
            break;
    }
    return "scalar";
}

Isa detected_isa() noexcept {
    static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    return isa;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

Isa select_isa(Isa isa) noexcept {
    if (isa == Isa::avx2 && detected_isa() != Isa::avx2) {
        isa = Isa::scalar;
    }
    current().store(isa, std::memory_order_relaxed);
    return isa;
}

double cosine_sum(std::span<const double> nodes, std::span<const double> weights, double x) {
#if defined(VOIDCRACK_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::cosine_sum(nodes, weights, x);
#endif
    return scalar::cosine_sum(nodes, weights, x);
}

void characteristic_row(double x, std::span<const double> nodes, std::span<double> out) {
#if defined(VOIDCRACK_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::characteristic_row(x, nodes, out);
#endif
    scalar::characteristic_row(x, nodes, out);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
#if defined(VOIDCRACK_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::axpy(alpha, x, y);
#endif
    scalar::axpy(alpha, x, y);
}

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(VOIDCRACK_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::dot(a, b);
#endif
    return scalar::dot(a, b);
}

}  // namespace voidcrack::simd
