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

#include <cassert>
#include <cmath>
#include <cstddef>

namespace voidcrack::simd::scalar {

double cosine_sum(std::span<const double> nodes, std::span<const double> weights, double x) {
    assert(nodes.size() == weights.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        sum += weights[k] * std::cos(nodes[k] * x);
    }
    return sum;
}

void characteristic_row(double x, std::span<const double> nodes, std::span<double> out) {
    assert(nodes.size() == out.size() + 1);
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = 1.0 / (x - nodes[j + 1]) - 1.0 / (x - nodes[j]);
    }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        y[k] += alpha * x[k];
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sum += a[k] * b[k];
    }
    return sum;
}

}  // namespace voidcrack::simd::scalar
