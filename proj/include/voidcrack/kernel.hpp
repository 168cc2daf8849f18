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

// Crack kernel K(x) = (1/pi) int_0^inf L(s) cos(sx) ds, split into its
// hypersingular characteristic part and a regular remainder:
//
//   K(x) = (-c0/pi) [ 1/x^2 + Kr(x) ],
//
// where c0 is the linear growth rate of L. Kr is log-singular at x = 0. It is
// computed as
//
//   Kr(x) = (-1/c0) [ int_0^s_cut D(s) cos(sx) ds + c1 T(x) + kappa G(x) ]
//
// where D is L - c0 s with its 1/s (and, for tail_order 2, 1/s^3) behaviour
// removed through s/(s^2+1) and s/(s^2+1)^2, whose cosine transforms T and G
// are known in closed form.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "voidcrack/hsie.hpp"
#include "voidcrack/symbol.hpp"

namespace voidcrack::kernel {

struct KernelSettings {
    double s_cut = 200.0;      ///< upper limit of the numerical transform
    double panel_tol = 1e-10;  ///< node-table and panel-integral tolerance
    int tail_order = 2;        ///< 1: subtract the 1/s term; 2: also the 1/s^3 term

    /// Throws ParameterError unless s_cut > 10, 0 < panel_tol < 1e-4 and
    /// tail_order is 1 or 2.
    void validate() const;
};

struct KernelConfig {
    symbol::SymbolSpec spec;
    KernelSettings settings;
};

/// Largest separation the kernel accepts.
inline constexpr double kMaxSeparation = 100.0;

/// Coefficient of 1/x^2 in K(x) as x -> 0: -c0/pi.
double characteristic_coefficient(const symbol::SymbolSpec& spec);

/// int_0^inf s cos(sx)/(s^2+1) ds = -(e^{-x} Ei(x) - e^{x} E1(x))/2 for x > 0.
double tail_transform_1(double x);

/// int_0^inf s cos(sx)/(s^2+1)^2 ds = 1/2 - x (e^{-x} Ei(x) + e^{x} E1(x))/4 for x > 0.
double tail_transform_2(double x);

/// Regular part of the normalized crack kernel. Thread-safe; values are
/// memoized on the exact bit pattern of |x|, so repeated separations are
/// computed once and every call returns the identical value.
class PorousKernel final : public hsie::RegularKernel {
public:
    explicit PorousKernel(KernelConfig config);

    /// Kr(x); throws DomainError for x == 0 or |x| > kMaxSeparation.
    double value(double x) const override;

    /// K(x) = (-c0/pi)(1/x^2 + Kr(x)).
    double full(double x) const;

    bool identically_zero() const override { return zero_; }
    double integration_tolerance() const override { return config_.settings.panel_tol; }

    /// Integral of Kr(x - t) over every panel of `grid`, panel order.
    std::vector<double> panel_integrals(const hsie::Grid& grid, double x) const;

    const KernelConfig& config() const noexcept { return config_; }

    /// Number of transform nodes used for separations of magnitude |x|.
    std::size_t node_count(double x) const;

private:
    struct NodeTable {
        std::vector<double> nodes;
        std::vector<double> weights;  ///< Gauss weight times D(node)
    };

    double remainder_integrand(double s) const;
    const NodeTable& table_for(double abs_x) const;
    double evaluate(double abs_x) const;

    KernelConfig config_;
    bool zero_;
    double c0_;
    double c1_;
    double kappa_;
    std::vector<double> breaks_;  ///< adaptive partition of [0, s_cut]

    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<NodeTable>> tables_;
    mutable std::unordered_map<std::uint64_t, double> memo_;
};

double regular_kernel(const KernelConfig& config, double x);
double full_kernel(const KernelConfig& config, double x);
std::vector<double> panel_integrals(const KernelConfig& config, const hsie::Grid& grid, double x);

}  // namespace voidcrack::kernel
