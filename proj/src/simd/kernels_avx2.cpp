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

#include <immintrin.h>

#include <cassert>
#include <cmath>
#include <cstddef>

// This translation unit is compiled with -mavx2 -mfma; nothing here may be
// called unless detected_isa() reported AVX2 support.

namespace voidcrack::simd::avx2 {

namespace {

// pi/2 split into four parts; with FMA the first two products are exact for
// quadrant counts well beyond kMaxReducedArg.
constexpr double kPio2A = 1.5707963109016418457;
constexpr double kPio2B = 1.5893254712295856734e-08;
constexpr double kPio2C = 6.123233932053594251e-17;
constexpr double kPio2D = 6.3683171635109499080e-25;
constexpr double kTwoOverPi = 0.63661977236758134308;

// Beyond this the quadrant count loses integrality in the reduction; such
// lanes take the libm path.
constexpr double kMaxReducedArg = 1.0e9;

// Minimax coefficients on [-pi/4, pi/4] (Cephes sin.c).
constexpr double kSin[6] = {
    1.58962301576546568060E-10, -2.50507477628578072866E-8, 2.75573136213857245213E-6,
    -1.98412698295895385996E-4, 8.33333333332211858878E-3,  -1.66666666666666307295E-1,
};
constexpr double kCos[6] = {
    -1.13585365213876817300E-11, 2.08757008419747316778E-9, -2.75573141792967388112E-7,
    2.48015872888517045348E-5,   -1.38888888888730564116E-3, 4.16666666666665929218E-2,
};

inline __m256d horner(__m256d z, const double (&c)[6]) {
    __m256d p = _mm256_set1_pd(c[0]);
    for (int i = 1; i < 6; ++i) {
        p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[i]));
    }
    return p;
}

inline bool in_range(__m256d ax) {
    const __m256d big = _mm256_cmp_pd(ax, _mm256_set1_pd(kMaxReducedArg), _CMP_GT_OQ);
    return _mm256_movemask_pd(big) == 0;
}

// cos of four lanes; caller guarantees |x| <= kMaxReducedArg.
inline __m256d cos4(__m256d x) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    const __m256d ax = _mm256_andnot_pd(sign_mask, x);

    const __m256d k = _mm256_round_pd(_mm256_mul_pd(ax, _mm256_set1_pd(kTwoOverPi)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2A), ax);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2B), r);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2C), r);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2D), r);

    const __m256d z = _mm256_mul_pd(r, r);
    const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, z), horner(z, kSin), r);
    const __m256d cos_r = _mm256_fmadd_pd(_mm256_mul_pd(z, z), horner(z, kCos),
                                          _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z,
                                                           _mm256_set1_pd(1.0)));

    // Quadrant q = k mod 4: cos, -sin, -cos, sin.
    const __m128i q32 = _mm256_cvtpd_epi32(k);
    const __m256i q = _mm256_cvtepi32_epi64(q32);
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i two = _mm256_set1_epi64x(2);
    const __m256d use_sin =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
    const __m256i flip_bits = _mm256_and_si256(_mm256_add_epi64(q, one), two);
    const __m256d negate = _mm256_castsi256_pd(_mm256_cmpeq_epi64(flip_bits, two));

    const __m256d value = _mm256_blendv_pd(cos_r, sin_r, use_sin);
    return _mm256_xor_pd(value, _mm256_and_pd(negate, sign_mask));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d cos4_checked(__m256d x) {
    const __m256d ax = _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
    if (in_range(ax)) {
        return cos4(x);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, x);
    for (double& v : lanes) v = std::cos(v);
    return _mm256_load_pd(lanes);
}

}  // namespace

void cos_batch(std::span<const double> in, std::span<double> out) {
    assert(in.size() == out.size());
    const std::size_t n = in.size();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(out.data() + k, cos4_checked(_mm256_loadu_pd(in.data() + k)));
    }
    for (; k < n; ++k) out[k] = std::cos(in[k]);
}

double cosine_sum(std::span<const double> nodes, std::span<const double> weights, double x) {
    assert(nodes.size() == weights.size());
    const std::size_t n = nodes.size();
    const __m256d vx = _mm256_set1_pd(x);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        const __m256d a0 = _mm256_mul_pd(_mm256_loadu_pd(nodes.data() + k), vx);
        const __m256d a1 = _mm256_mul_pd(_mm256_loadu_pd(nodes.data() + k + 4), vx);
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(weights.data() + k), cos4_checked(a0), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(weights.data() + k + 4), cos4_checked(a1), acc1);
    }
    for (; k + 4 <= n; k += 4) {
        const __m256d a0 = _mm256_mul_pd(_mm256_loadu_pd(nodes.data() + k), vx);
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(weights.data() + k), cos4_checked(a0), acc0);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; ++k) sum += weights[k] * std::cos(nodes[k] * x);
    return sum;
}

void characteristic_row(double x, std::span<const double> nodes, std::span<double> out) {
    assert(nodes.size() == out.size() + 1);
    const std::size_t n = out.size();
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d left = _mm256_sub_pd(vx, _mm256_loadu_pd(nodes.data() + j));
        const __m256d right = _mm256_sub_pd(vx, _mm256_loadu_pd(nodes.data() + j + 1));
        const __m256d v = _mm256_sub_pd(_mm256_div_pd(one, right), _mm256_div_pd(one, left));
        _mm256_storeu_pd(out.data() + j, v);
    }
    for (; j < n; ++j) out[j] = 1.0 / (x - nodes[j + 1]) - 1.0 / (x - nodes[j]);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vy = _mm256_loadu_pd(y.data() + k);
        _mm256_storeu_pd(y.data() + k, _mm256_fmadd_pd(va, _mm256_loadu_pd(x.data() + k), vy));
    }
    for (; k < n; ++k) y[k] = std::fma(alpha, x[k], y[k]);
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    const std::size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + k), _mm256_loadu_pd(b.data() + k), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + k + 4),
                               _mm256_loadu_pd(b.data() + k + 4), acc1);
    }
    for (; k + 4 <= n; k += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + k), _mm256_loadu_pd(b.data() + k), acc0);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; ++k) sum = std::fma(a[k], b[k], sum);
    return sum;
}

}  // namespace voidcrack::simd::avx2
