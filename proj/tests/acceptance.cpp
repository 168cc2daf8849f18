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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "voidcrack/cli.hpp"
#include "voidcrack/crack.hpp"
#include "voidcrack/hsie.hpp"
#include "voidcrack/kernel.hpp"
#include "voidcrack/symbol.hpp"
#include "voidcrack/thermo.hpp"

using namespace voidcrack;
using std::numbers::pi;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

crack::CrackProblem problem(double N, double a = 1.0) { return {symbol::SymbolSpec(0.2, N), a, 0.5}; }

const kernel::KernelSettings settings{};

void classical_oracle() {
    const auto start = std::chrono::steady_clock::now();
    const auto sol = crack::crack_opening(problem(0.0), settings, 400);
    const auto r = crack::scf(sol);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double worst = 0.0;
    for (std::size_t i = 0; i < 400; ++i) {
        const double t = sol.solution.grid.midpoints()[i];
        if (std::abs(t) > 0.8) continue;
        const double exact = 0.625 * std::sqrt(1 - t * t);
        worst = std::max(worst, std::abs(sol.solution.g[i] - exact) / exact);
    }
    const bool pass = worst <= 0.02 && std::abs(r.ratio - 1.0) <= 0.01 && seconds <= 10.0;
    report(1, "classical oracle", pass,
           "max opening error " + fmt("%.3e", worst) + ", ratio " + fmt("%.6f", r.ratio) + ", runtime " +
               fmt("%.2f", seconds) + " s");
}

void dual_solver() {
    const auto p = problem(0.5);
    const auto assembled = crack::assemble(p, settings);
    const auto col = crack::solve_assembled(p, assembled, 400);
    const auto cheb = hsie::spectral_solve(assembled, 32);
    // g(0): the two panels adjacent to the centre, against the expansion at 0.
    const double g_col = 0.5 * (col.solution.g[199] + col.solution.g[200]);
    const double g_spec = std::abs(cheb.opening(0.0));
    const double centre = std::abs(g_col - g_spec) / g_spec;
    double profile = 0.0;
    for (std::size_t i = 0; i < 400; ++i) {
        const double t = col.solution.grid.midpoints()[i];
        if (std::abs(t) > 0.8) continue;
        const double s = std::abs(cheb.opening(t));
        profile = std::max(profile, std::abs(col.solution.g[i] - s) / s);
    }
    report(2, "dual-solver agreement", centre <= 0.005 && profile <= 0.01,
           "g(0) difference " + fmt("%.3e", centre) + ", profile max difference " + fmt("%.3e", profile));
}

mp L_mp(double c2, double N, const mp& s) {
    const mp n = N, c = c2;
    const mp q = sqrt(s * s + 1 - n);
    return s / q * (2 * n * c * s * s * (q - s) + (1 - n) * (1 - n - c) * q);
}

void symbol_asymptotics() {
    bool pass = true;
    double worst_sandwich = 0.0, worst_c1 = 0.0;
    for (double N : {0.2, 0.5, 0.8}) {
        for (double c2 : {0.1, 0.2, 0.5}) {
            const symbol::SymbolSpec spec(c2, N);
            const double c0 = symbol::asymptote_c0(spec), c1 = symbol::asymptote_c1(spec);
            for (double s : {1e2, 1e3, 1e4}) {
                const double lhs = std::abs(symbol::L(spec, s) / (c0 * s) - 1.0);
                const double bound = std::abs(c1) / (c0 * s * s) * 1.5;
                worst_sandwich = std::max(worst_sandwich, lhs / bound);
                pass = pass && lhs <= bound;
            }
            const mp e = 1 - mp(N), s = 1e4;
            const mp limit = s * (L_mp(c2, N, s) - e * e * (1 - mp(c2)) * s);
            const double rel = std::abs(c1 - static_cast<double>(limit)) / std::abs(static_cast<double>(limit));
            worst_c1 = std::max(worst_c1, rel);
            pass = pass && rel <= 1e-6;
        }
    }
    report(3, "symbol asymptotics", pass,
           "worst sandwich use " + fmt("%.3f", worst_sandwich) + " of bound, worst c1 relative error " +
               fmt("%.3e", worst_c1));
}

void kernel_hypersingularity() {
    bool pass = true;
    double worst_ratio = 0.0;
    for (double N : {0.2, 0.5, 0.8}) {
        for (double c2 : {0.1, 0.2, 0.5}) {
            const symbol::SymbolSpec spec(c2, N);
            const double x = 1e-3;
            const double ratio =
                kernel::full_kernel({spec, settings}, x) * pi * x * x / -symbol::asymptote_c0(spec);
            worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0));
            pass = pass && std::abs(ratio - 1.0) <= 1e-3;
        }
    }
    // Refinement: doubled s_cut and halved tolerance.
    double worst_change = 0.0;
    kernel::KernelSettings fine;
    fine.s_cut = 2 * settings.s_cut;
    fine.panel_tol = 0.5 * settings.panel_tol;
    for (double N : {0.2, 0.5, 0.8}) {
        for (double c2 : {0.1, 0.2, 0.5}) {
            const symbol::SymbolSpec spec(c2, N);
            const kernel::PorousKernel base({spec, settings}), refined({spec, fine});
            for (double x = 1e-2; x <= 10.0 * 1.0001; x *= std::pow(10.0, 0.05)) {
                const double a = base.value(x), b = refined.value(x);
                worst_change = std::max(worst_change, std::abs(a - b) / std::abs(b));
            }
        }
    }
    pass = pass && worst_change < 1e-8;
    report(4, "kernel hypersingularity", pass,
           "worst |K pi x^2/(-c0) - 1| " + fmt("%.3e", worst_ratio) + ", worst refinement change " +
               fmt("%.3e", worst_change));
}

void finite_part_machinery() {
    bool telescopes = true;
    double worst_tel = 0.0;
    for (std::size_t n : {10u, 101u, 1000u}) {
        const hsie::Grid grid(1.0, n);
        const auto c = hsie::characteristic_matrix(grid);
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0, mag = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                sum += c(i, j);
                mag += std::abs(c(i, j));
            }
            const double x = grid.midpoints()[i];
            const double rel = std::abs(sum - (1 / (x - 1) - 1 / (x + 1))) / mag;
            worst_tel = std::max(worst_tel, rel);
            telescopes = telescopes && rel <= 1e-14;
        }
    }
    const std::size_t n = 1000;
    const hsie::Grid grid(1.0, n);
    std::vector<double> g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = std::sqrt(1 - grid.midpoints()[j] * grid.midpoints()[j]);
    const auto v = linalg::multiply(hsie::characteristic_matrix(grid), g);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(grid.midpoints()[i]) > 0.8) continue;
        worst = std::max(worst, std::abs(v[i] + pi) / pi);
    }
    report(5, "finite-part machinery", telescopes && worst <= 0.01,
           "worst telescoping residual " + fmt("%.3e", worst_tel) + " of row magnitude, identity error " +
               fmt("%.3e", worst));
}

void porosity_claims() {
    bool pass = true;
    std::string detail = "ratios";
    double at_a1 = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double N = 0.1 * k;
        const auto r = crack::scf(crack::crack_opening(problem(N), settings, 400));
        pass = pass && r.ratio > 1.0 && !r.flagged;
        detail += " " + fmt("%.4f", r.ratio) + (r.flagged ? "(flagged)" : "");
        if (k == 5) at_a1 = r.ratio;
    }
    const auto r4 = crack::scf(crack::crack_opening(problem(0.5, 4.0), settings, 400));
    pass = pass && r4.ratio > at_a1 && !r4.flagged;
    detail += "; N=0.5: a=1 " + fmt("%.4f", at_a1) + ", a=4 " + fmt("%.4f", r4.ratio);
    report(6, "porosity claims", pass, detail);
}

void thermoelastic_reduction() {
    const std::size_t n = 400;
    const auto base = problem(0.5);
    const auto elastic = crack::crack_opening(base, settings, n);
    const auto elastic_scf = crack::scf(elastic);

    auto same = [&](const thermo::ThermoCrackProblem& p) {
        const auto t = thermo::thermo_opening(p, settings, n);
        const auto s = crack::scf(t);
        return t.solution.g == elastic.solution.g && s.k == elastic_scf.k && s.ratio == elastic_scf.ratio;
    };
    const bool b_zero = same({base, 0.0, thermo::FluxProfile::constant(1.0, 1.0)});
    const bool f_zero = same({base, 0.25, thermo::FluxProfile::constant(1.0, 0.0)});

    const auto unit = thermo::FluxProfile::constant(1.0, 1.0);
    const double drop = thermo::theta_raw(unit, 0.0) - thermo::theta_raw(unit, 1.0);
    const double drop_error = std::abs(drop - 2 * std::log(2.0) / pi);

    const thermo::ThermoCrackProblem p{base, 0.2, thermo::FluxProfile::function(1.0, [](double x) {
                                           return 1.0 + 0.5 * std::cos(2 * x);
                                       })};
    auto raw = [&](thermo::LoadParts parts) {
        const auto s = thermo::thermo_opening(p, settings, n, parts);
        auto g = s.solution.g;
        if (s.negated) {
            for (double& v : g) v = -v;
        }
        return g;
    };
    const auto both = raw(thermo::LoadParts::both);
    const auto mech = raw(thermo::LoadParts::mechanical);
    const auto heat = raw(thermo::LoadParts::thermal);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(both[i] - (mech[i] + heat[i])) / std::abs(both[i]));
    }
    const bool pass = b_zero && f_zero && drop_error <= 1e-6 && worst <= 1e-9;
    report(7, "thermoelastic reduction", pass,
           std::string("B=0 identical: ") + (b_zero ? "yes" : "no") + ", f0=0 identical: " +
               (f_zero ? "yes" : "no") + ", theta drop error " + fmt("%.3e", drop_error) +
               ", superposition error " + fmt("%.3e", worst));
}

void convergence_order() {
    // Error at the collocation point nearest the centre against the closed-form
    // opening at that point.
    std::vector<double> errors;
    const std::vector<std::size_t> ns{50, 100, 200, 400};
    for (std::size_t n : ns) {
        const auto s = crack::crack_opening(problem(0.0), settings, n);
        const std::size_t k = n / 2;
        const double x = s.solution.grid.midpoints()[k];
        const double exact = 0.625 * std::sqrt(1 - x * x);
        errors.push_back(std::abs(s.solution.g[k] - exact) / exact);
    }
    bool pass = true;
    std::string detail = "errors";
    for (double e : errors) detail += " " + fmt("%.4e", e);
    detail += "; orders";
    for (std::size_t i = 1; i < errors.size(); ++i) {
        const double order = std::log2(errors[i - 1] / errors[i]);
        detail += " " + fmt("%.4f", order);
        pass = pass && errors[i] < errors[i - 1] && order >= 1.0;
    }
    report(8, "convergence order", pass, detail);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("voidcrack_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string files[2];
    int codes[2];
    for (int run = 0; run < 2; ++run) {
        files[run] = (dir / ("sweep" + std::to_string(run) + ".csv")).string();
        std::ostringstream out, err;
        codes[run] = cli::main_entry({"sweep", "--N", "0", "--c2", "0.2", "--a", "1", "--n", "200", "--values",
                                      "0,0.2,0.4,0.6,0.8", "--out", files[run]},
                                     out, err);
    }
    const std::string a = slurp(files[0]), b = slurp(files[1]);
    fs::remove_all(dir);
    const bool pass = codes[0] == 0 && codes[1] == 0 && !a.empty() && a == b;
    report(9, "determinism", pass,
           "two sweep runs, " + std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different"));
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    classical_oracle();
    dual_solver();
    symbol_asymptotics();
    kernel_hypersingularity();
    finite_part_machinery();
    porosity_claims();
    thermoelastic_reduction();
    convergence_order();
    determinism();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("acceptance: %d of 9 criteria failed, %.1f s\n", failures, seconds);
    return failures == 0 ? 0 : 1;
}
