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

#include "voidcrack/kernel.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "voidcrack/error.hpp"
#include "voidcrack/quadrature.hpp"
#include "voidcrack/simd.hpp"

namespace voidcrack::kernel {

namespace {

// Largest s-panel width times |x| for which a 16-point rule still resolves
// cos(sx) to machine precision.
constexpr double kMaxPhasePerPanel = 8.0;

int band_of(double abs_x) {
    if (abs_x <= 1.0) return 0;
    return static_cast<int>(std::ceil(std::log2(abs_x)));
}

double exp_ei(double x) { return std::exp(-x) * std::expint(x); }   // e^{-x} Ei(x)
double exp_e1(double x) { return -std::exp(x) * std::expint(-x); }  // e^{x} E1(x)

}  // namespace

void KernelSettings::validate() const {
    if (!(s_cut > 10.0)) throw ParameterError("kernel s_cut must exceed 10");
    if (!(panel_tol > 0.0 && panel_tol < 1e-4)) {
        throw ParameterError("kernel panel_tol must lie in (0, 1e-4)");
    }
    if (tail_order != 1 && tail_order != 2) {
        throw ParameterError("kernel tail_order must be 1 or 2");
    }
}

double characteristic_coefficient(const symbol::SymbolSpec& spec) {
    return -symbol::asymptote_c0(spec) / std::numbers::pi;
}

double tail_transform_1(double x) {
    x = std::abs(x);
    return -0.5 * (exp_ei(x) - exp_e1(x));
}

double tail_transform_2(double x) {
    x = std::abs(x);
    return 0.5 - 0.25 * x * (exp_ei(x) + exp_e1(x));
}

PorousKernel::PorousKernel(KernelConfig config) : config_(std::move(config)) {
    config_.settings.validate();
    const auto& spec = config_.spec;
    zero_ = spec.coupling() == 0.0;
    c0_ = symbol::asymptote_c0(spec);
    c1_ = symbol::asymptote_c1(spec);
    kappa_ = config_.settings.tail_order == 2 ? symbol::asymptote_c3(spec) + c1_ : 0.0;
    if (zero_) return;

    // Base partition of [0, s_cut]: geometric toward s = 0 where D varies on
    // the scale sqrt(1 - N), then bisected until the 16-point rule on each
    // panel agrees with its two halves.
    const double s_cut = config_.settings.s_cut;
    std::vector<double> seeds{0.0};
    for (double s = 1.0 / 64.0; s < kMaxPhasePerPanel && s < s_cut; s *= 2.0) seeds.push_back(s);
    for (double s = kMaxPhasePerPanel; s < s_cut; s += kMaxPhasePerPanel) seeds.push_back(s);
    seeds.push_back(s_cut);

    auto d = [this](double s) { return remainder_integrand(s); };
    const double tol = config_.settings.panel_tol * std::abs(c1_);
    breaks_.push_back(0.0);
    auto refine = [&](auto& self, double lo, double hi, int depth) -> void {
        const double mid = 0.5 * (lo + hi);
        const double coarse = quadrature::gauss(d, lo, hi);
        const double fine = quadrature::gauss(d, lo, mid) + quadrature::gauss(d, mid, hi);
        if (depth == 0 || std::abs(fine - coarse) <= tol * (hi - lo)) {
            breaks_.push_back(hi);
            return;
        }
        self(self, lo, mid, depth - 1);
        self(self, mid, hi, depth - 1);
    };
    for (std::size_t i = 0; i + 1 < seeds.size(); ++i) refine(refine, seeds[i], seeds[i + 1], 40);
}

double PorousKernel::remainder_integrand(double s) const {
    const double r = symbol::remainder(config_.spec, s);
    const double w = 1.0 / (s * s + 1.0);
    return r - c1_ * s * w - kappa_ * s * w * w;
}

const PorousKernel::NodeTable& PorousKernel::table_for(double abs_x) const {
    const int band = band_of(abs_x);
    if (auto it = tables_.find(band); it != tables_.end()) return *it->second;

    const double max_width = kMaxPhasePerPanel / std::ldexp(1.0, band);
    const auto& rule = quadrature::gl16();
    auto table = std::make_unique<NodeTable>();
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        const double lo = breaks_[i];
        const double width = breaks_[i + 1] - lo;
        const auto pieces = static_cast<std::size_t>(std::ceil(width / max_width));
        const double step = width / static_cast<double>(pieces);
        for (std::size_t p = 0; p < pieces; ++p) {
            const double a = lo + step * static_cast<double>(p);
            const double half = 0.5 * step;
            for (std::size_t k = 0; k < rule.size(); ++k) {
                const double s = a + half * (1.0 + rule.nodes[k]);
                table->nodes.push_back(s);
                table->weights.push_back(half * rule.weights[k] * remainder_integrand(s));
            }
        }
    }
    return *tables_.emplace(band, std::move(table)).first->second;
}

double PorousKernel::evaluate(double abs_x) const {
    const NodeTable& table = table_for(abs_x);
    const double body = simd::cosine_sum(table.nodes, table.weights, abs_x);
    const double tail = c1_ * tail_transform_1(abs_x) + kappa_ * tail_transform_2(abs_x);
    return -(body + tail) / c0_;
}

double PorousKernel::value(double x) const {
    const double ax = std::abs(x);
    if (ax == 0.0) throw DomainError("regular kernel is log-singular at zero separation");
    if (!(ax <= kMaxSeparation)) {
        throw DomainError("kernel separation |x| = " + std::to_string(ax) + " outside (0, 100]");
    }
    if (zero_) return 0.0;

    const auto key = std::bit_cast<std::uint64_t>(ax);
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const double v = evaluate(ax);
    memo_.emplace(key, v);
    return v;
}

double PorousKernel::full(double x) const {
    const double kr = value(x);
    return -c0_ / std::numbers::pi * (1.0 / (x * x) + kr);
}

std::vector<double> PorousKernel::panel_integrals(const hsie::Grid& grid, double x) const {
    const auto nodes = grid.nodes();
    std::vector<double> out(grid.size(), 0.0);
    if (zero_) return out;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = panel_integral(x - nodes[j + 1], x - nodes[j]);
    }
    return out;
}

std::size_t PorousKernel::node_count(double x) const {
    if (zero_) return 0;
    std::lock_guard lock(mutex_);
    return table_for(std::abs(x)).nodes.size();
}

double regular_kernel(const KernelConfig& config, double x) { return PorousKernel(config).value(x); }

double full_kernel(const KernelConfig& config, double x) { return PorousKernel(config).full(x); }

std::vector<double> panel_integrals(const KernelConfig& config, const hsie::Grid& grid, double x) {
    return PorousKernel(config).panel_integrals(grid, x);
}

}  // namespace voidcrack::kernel
