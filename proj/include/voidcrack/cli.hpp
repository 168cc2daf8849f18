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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "voidcrack/crack.hpp"
#include "voidcrack/error.hpp"
#include "voidcrack/kernel.hpp"
#include "voidcrack/material.hpp"
#include "voidcrack/symbol.hpp"

namespace voidcrack::cli {

enum class Mode { solve, sweep, kernel_dump, symbol_dump, converge, thermo_solve };

std::string_view mode_name(Mode mode) noexcept;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io_failure = 1;
inline constexpr int usage = 2;
inline constexpr int flagged = 3;
inline constexpr int numerical = 4;
}  // namespace exit_code

/// Bad command line or configuration file.
class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    Mode mode = Mode::solve;

    symbol::SymbolSpec spec{0.2, 0.0};
    std::optional<material::MaterialParams> material;  ///< when given as raw constants

    double a = 1.0;
    double load = 0.5;
    std::size_t n = 400;
    kernel::KernelSettings kernel;

    crack::SweepAxis axis = crack::SweepAxis::N;
    std::vector<double> values;

    double x_min = 0.01, x_max = 2.0;
    double s_min = 0.0, s_max = 100.0;
    std::size_t count = 50;

    std::vector<std::size_t> n_values{50, 100, 200, 400};

    std::optional<double> B;
    std::string flux = "constant:1";

    std::optional<std::string> out;
    std::optional<std::string> plot;
};

/// Parses `voidcrack <mode> [flags] [--config file.json] ...`; `args` excludes
/// the program name. Values from the configuration file are overridden by
/// flags. Throws UsageError (also for out-of-range physics) naming the
/// offending key. Returns nullopt when help was requested and printed.
std::optional<RunConfig> parse_config(const std::vector<std::string>& args, std::ostream& out);

/// Runs a parsed configuration and returns the process exit code. Results go
/// to `config.out` (atomically) or to `out`; per-row summaries go to `out`
/// when a file is written.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run with the exit-code mapping of the command-line tool.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Output helpers.

/// printf-style %.12g rendering; zero (of either sign) prints as "0".
std::string format_number(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
};

/// Writes `content` to a temporary file next to `path`, then renames it over
/// `path`. Throws std::runtime_error on failure; `path` is never left partial.
void write_atomic(const std::string& path, const std::string& content);

struct Series {
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line chart.
std::string line_chart_svg(const Series& series, const std::string& title,
                           const std::string& x_label, const std::string& y_label);

}  // namespace voidcrack::cli
