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

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "voidcrack/cli.hpp"
#include "voidcrack/hsie.hpp"
#include "voidcrack/thermo.hpp"

namespace voidcrack::cli {

namespace {

using Row = std::vector<std::string>;

struct Output {
    Table table;
    std::vector<std::string> summary;
    Series series;
    std::string title, x_label, y_label;
    bool flagged = false;
};

void require_finite(std::initializer_list<double> values) {
    for (double v : values) {
        if (!std::isfinite(v)) throw SolverError("non-finite result", 0);
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Row scf_row(double axis_value, const crack::ScfResult& r, std::size_t n, double residual) {
    require_finite({r.k, r.ratio, r.route_a, r.route_b, residual});
    return {format_number(axis_value), format_number(r.k),       format_number(r.ratio),
            format_number(r.route_a),  format_number(r.route_b), std::to_string(n),
            format_number(residual)};
}

std::string scf_summary(std::string_view axis, double value, const crack::ScfResult& r) {
    std::ostringstream s;
    s << axis << "=" << format_number(value) << " k=" << format_number(r.k)
      << " ratio=" << format_number(r.ratio) << " route_A=" << format_number(r.route_a)
      << " route_B=" << format_number(r.route_b) << " flagged=" << yes_no(r.flagged);
    return s.str();
}

const Row kScfHeader{"axis", "k", "ratio", "route_A", "route_B", "n", "residual_norm"};

crack::CrackProblem problem_of(const RunConfig& c) { return {c.spec, c.a, c.load}; }

Output run_solve(const RunConfig& c) {
    Output o;
    const auto sol = crack::crack_opening(problem_of(c), c.kernel, c.n);
    const auto r = crack::scf(sol);
    o.table.header = kScfHeader;
    o.table.rows.push_back(scf_row(c.spec.coupling(), r, c.n, sol.solution.residual_norm));
    o.summary.push_back(scf_summary("N", c.spec.coupling(), r));
    o.flagged = r.flagged;
    return o;
}

Output run_sweep(const RunConfig& c) {
    Output o;
    const auto rows = crack::sweep(problem_of(c), c.kernel, c.axis, c.values, c.n);
    o.table.header = kScfHeader;
    for (const auto& row : rows) {
        o.table.rows.push_back(scf_row(row.value, row.scf, row.n, row.residual_norm));
        o.summary.push_back(scf_summary(crack::axis_name(c.axis), row.value, row.scf));
        o.series.x.push_back(row.value);
        o.series.y.push_back(row.scf.ratio);
        o.flagged = o.flagged || row.scf.flagged;
    }
    const std::string axis(crack::axis_name(c.axis));
    o.title = "Relative stress-concentration factor, c2 = " + format_number(c.spec.c2());
    o.x_label = axis;
    o.y_label = "k / k0";
    return o;
}

double sample(double lo, double hi, std::size_t i, std::size_t count) {
    if (count == 1) return lo;
    if (i + 1 == count) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

Output run_kernel_dump(const RunConfig& c) {
    Output o;
    const kernel::PorousKernel k(kernel::KernelConfig{c.spec, c.kernel});
    o.table.header = {"x", "K_regular", "K_full"};
    for (std::size_t i = 0; i < c.count; ++i) {
        const double x = sample(c.x_min, c.x_max, i, c.count);
        const double kr = k.value(x);
        const double kf = k.full(x);
        require_finite({kr, kf});
        o.table.rows.push_back({format_number(x), format_number(kr), format_number(kf)});
        o.series.x.push_back(x);
        o.series.y.push_back(kr);
    }
    o.title = "Regular kernel part, N = " + format_number(c.spec.coupling());
    o.x_label = "x";
    o.y_label = "K_regular";
    return o;
}

Output run_symbol_dump(const RunConfig& c) {
    Output o;
    o.table.header = {"s", "L", "L_minus_c0s"};
    for (std::size_t i = 0; i < c.count; ++i) {
        const double s = sample(c.s_min, c.s_max, i, c.count);
        const double l = symbol::L(c.spec, s);
        const double r = symbol::remainder(c.spec, s);
        require_finite({l, r});
        o.table.rows.push_back({format_number(s), format_number(l), format_number(r)});
        o.series.x.push_back(s);
        o.series.y.push_back(l);
    }
    o.title = "Symbol L(s), N = " + format_number(c.spec.coupling());
    o.x_label = "s";
    o.y_label = "L";
    return o;
}

// Collocation point nearest the crack centre (the centre itself for odd n,
// the first point right of it for even n).
std::size_t centre_index(const hsie::Solution& s) { return s.g.size() / 2; }

Output run_converge(const RunConfig& c) {
    Output o;
    const auto problem = problem_of(c);
    std::optional<hsie::ChebSolution> cheb;
    if (c.spec.coupling() != 0.0) cheb = hsie::spectral_solve(crack::assemble(problem, c.kernel), 32);
    auto reference = [&](double x) {
        if (!cheb) return c.load / (1.0 - c.spec.c2()) * std::sqrt(c.a * c.a - x * x);
        return std::abs(cheb->opening(x));
    };
    o.table.header = {"n", "x_c", "g_c", "g_ref", "error", "order"};
    double previous = 0.0;
    std::size_t previous_n = 0;
    for (std::size_t i = 0; i < c.n_values.size(); ++i) {
        const std::size_t n = c.n_values[i];
        const auto sol = crack::crack_opening(problem, c.kernel, n);
        const std::size_t k = centre_index(sol.solution);
        const double x = sol.solution.grid.midpoints()[k];
        const double g = sol.solution.g[k];
        const double ref = reference(x);
        const double error = std::abs(g - ref) / std::abs(ref);
        require_finite({g, error});
        std::string order;
        if (i > 0 && error > 0.0 && previous > 0.0 && n != previous_n) {
            order = format_number(std::log(previous / error) /
                                  std::log(static_cast<double>(n) / static_cast<double>(previous_n)));
        }
        o.table.rows.push_back({std::to_string(n), format_number(x), format_number(g), format_number(ref),
                                format_number(error), order});
        o.summary.push_back("n=" + std::to_string(n) + " g_c=" + format_number(g) +
                            " error=" + format_number(error) + (order.empty() ? "" : " order=" + order));
        o.series.x.push_back(static_cast<double>(n));
        o.series.y.push_back(error);
        previous = error;
        previous_n = n;
    }
    o.title = "Relative error of the centre opening";
    o.x_label = "n";
    o.y_label = "error";
    return o;
}

thermo::FluxProfile load_flux(const std::string& spec, double a) {
    constexpr std::string_view prefix = "constant:";
    try {
        if (spec.rfind(prefix, 0) == 0) {
            const std::string text = spec.substr(prefix.size());
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return thermo::FluxProfile::constant(a, v);
        }
    } catch (const std::logic_error&) {
        throw UsageError("invalid flux '" + spec + "': expected constant:<value> or a CSV file");
    }

    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open flux file '" + spec + "'");
    std::vector<double> xs, fs;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream cells(line);
        std::string x_text, f_text;
        std::getline(cells, x_text, ',');
        std::getline(cells, f_text, ',');
        try {
            std::size_t ux = 0, uf = 0;
            const double x = std::stod(x_text, &ux);
            const double f = std::stod(f_text, &uf);
            xs.push_back(x);
            fs.push_back(f);
        } catch (const std::logic_error&) {
            if (xs.empty()) continue;  // header row
            throw UsageError("flux file '" + spec + "' line " + std::to_string(line_no) +
                             ": expected two numbers");
        }
    }
    try {
        return thermo::FluxProfile::piecewise_linear(a, xs, fs);
    } catch (const ParameterError& e) {
        throw UsageError("flux file '" + spec + "': " + e.what());
    }
}

Output run_thermo(const RunConfig& c, std::ostream& err) {
    Output o;
    const thermo::ThermoCrackProblem problem{problem_of(c), c.B, load_flux(c.flux, c.a)};
    const auto r = thermo::thermo_scf(problem, c.kernel, c.n);
    if (r.net_flux_warning) {
        err << "warning: net crack-face flux " << format_number(r.net_flux)
            << " is non-zero; temperature is taken relative to the crack centre\n";
    }
    o.table.header = kScfHeader;
    o.table.header.push_back("B");
    o.table.header.push_back("net_flux");
    Row row = scf_row(c.spec.coupling(), r.scf, c.n, r.residual_norm);
    row.push_back(format_number(r.B));
    row.push_back(format_number(r.net_flux));
    o.table.rows.push_back(std::move(row));
    o.summary.push_back(scf_summary("N", c.spec.coupling(), r.scf) + " B=" + format_number(r.B));
    o.flagged = r.scf.flagged;
    return o;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Output o;
    switch (config.mode) {
        case Mode::solve:
            o = run_solve(config);
            break;
        case Mode::sweep:
            o = run_sweep(config);
            break;
        case Mode::kernel_dump:
            o = run_kernel_dump(config);
            break;
        case Mode::symbol_dump:
            o = run_symbol_dump(config);
            break;
        case Mode::converge:
            o = run_converge(config);
            break;
        case Mode::thermo_solve:
            o = run_thermo(config, err);
            break;
    }

    const std::string csv = o.table.to_csv();
    if (config.out) {
        write_atomic(*config.out, csv);
        for (const auto& line : o.summary) out << line << '\n';
    } else {
        out << csv;
    }
    if (config.plot) {
        if (o.series.x.empty() && o.title.empty()) {
            err << "note: mode " << mode_name(config.mode) << " has no chart; --plot ignored\n";
        } else {
            write_atomic(*config.plot, line_chart_svg(o.series, o.title, o.x_label, o.y_label));
        }
    }
    if (o.flagged) {
        err << "flagged: the two stress-concentration routes disagree by more than "
            << format_number(100 * crack::kRouteTolerance) << "%\n";
        return exit_code::flagged;
    }
    return exit_code::ok;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto config = parse_config(args, out);
        if (!config) return exit_code::ok;
        return run(*config, out, err);
    } catch (const UsageError& e) {
        err << "voidcrack: " << e.what() << "\nRun 'voidcrack --help' for usage.\n";
        return exit_code::usage;
    } catch (const ParameterError& e) {
        err << "voidcrack: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const ConfigurationError& e) {
        err << "voidcrack: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const SolverError& e) {
        err << "voidcrack: numerical failure: " << e.what() << '\n';
        return exit_code::numerical;
    } catch (const DomainError& e) {
        err << "voidcrack: numerical failure: " << e.what() << '\n';
        return exit_code::numerical;
    } catch (const std::exception& e) {
        err << "voidcrack: " << e.what() << '\n';
        return exit_code::io_failure;
    }
}

}  // namespace voidcrack::cli
