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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <unistd.h>

#include "voidcrack/cli.hpp"

namespace voidcrack::cli {

std::string format_number(double v) {
    if (v == 0.0) return "0";  // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string Table::to_csv() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(temp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot create '" + temp.string() + "'");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw std::runtime_error("failed writing '" + temp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(temp, ignored);
        throw std::runtime_error("cannot move output into place at '" + path + "': " + ec.message());
    }
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

// Tick spacing of 1, 2 or 5 times a power of ten giving about `target` ticks.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

struct Range {
    double lo, hi;
};

Range padded(const std::vector<double>& v) {
    auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    double lo = *mn, hi = *mx;
    if (hi == lo) {
        const double pad = lo == 0.0 ? 1.0 : 0.1 * std::abs(lo);
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

}  // namespace

std::string line_chart_svg(const Series& series, const std::string& title,
                           const std::string& x_label, const std::string& y_label) {
    constexpr double W = 640, H = 420, left = 80, right = 20, top = 40, bottom = 60;
    const double pw = W - left - right;
    const double ph = H - top - bottom;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << xml_escape(title) << "</text>\n";

    const std::size_t count = std::min(series.x.size(), series.y.size());
    if (count == 0) {
        svg << "<text x=\"" << W / 2 << "\" y=\"" << H / 2
            << "\" text-anchor=\"middle\">no data</text>\n</svg>\n";
        return svg.str();
    }
    const std::vector<double> xs(series.x.begin(), series.x.begin() + count);
    const std::vector<double> ys(series.y.begin(), series.y.begin() + count);
    const Range xr = padded(xs);
    const Range yr = padded(ys);
    auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return top + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    const double xs_step = nice_step(xr.hi - xr.lo, 6);
    for (double t = std::ceil(xr.lo / xs_step) * xs_step; t <= xr.hi; t += xs_step) {
        const double x = px(t);
        svg << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\""
            << top + ph + 5 << "\" stroke=\"black\"/>"
            << "<text x=\"" << x << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
            << format_number(std::abs(t) < 1e-12 * xs_step ? 0.0 : t) << "</text>\n";
    }
    const double ys_step = nice_step(yr.hi - yr.lo, 6);
    for (double t = std::ceil(yr.lo / ys_step) * ys_step; t <= yr.hi; t += ys_step) {
        const double y = py(t);
        svg << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
            << "\" stroke=\"black\"/>"
            << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + pw << "\" y2=\"" << y
            << "\" stroke=\"#dddddd\"/>"
            << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
            << format_number(std::abs(t) < 1e-12 * ys_step ? 0.0 : t) << "</text>\n";
    }

    svg << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < count; ++i) {
        svg << (i ? " " : "") << px(xs[i]) << ',' << py(ys[i]);
    }
    svg << "\"/>\n";
    for (std::size_t i = 0; i < count; ++i) {
        svg << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i])
            << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
    }

    svg << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">"
        << xml_escape(x_label) << "</text>\n";
    svg << "<text transform=\"translate(20," << top + ph / 2
        << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(y_label) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace voidcrack::cli
