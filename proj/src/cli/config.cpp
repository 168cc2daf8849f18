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
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "voidcrack/cli.hpp"

namespace voidcrack::cli {

using nlohmann::json;

namespace {

enum class Kind { number, integer, number_list, integer_list, text };

struct Key {
    const char* name;
    Kind kind;
    const char* help;
};

// Every option is accepted both as --name on the command line and as "name"
// in the JSON configuration file.
constexpr Key kKeys[] = {
    {"N", Kind::number, "coupling number, 0 <= N < 1"},
    {"c2", Kind::number, "mu/(lambda + 2 mu), 0 < c2 < 1"},
    {"lambda", Kind::number, "Lame modulus lambda"},
    {"mu", Kind::number, "shear modulus mu"},
    {"alpha", Kind::number, "porosity constant alpha"},
    {"beta", Kind::number, "porosity coupling beta"},
    {"xi", Kind::number, "porosity constant xi"},
    {"b", Kind::number, "thermoelastic constant b"},
    {"m", Kind::number, "thermal porosity constant m"},
    {"B", Kind::number, "thermal group b/(lambda + 2 mu)"},
    {"a", Kind::number, "dimensionless crack half-length"},
    {"load", Kind::number, "normal load sigma0/(2 mu)"},
    {"n", Kind::integer, "number of collocation panels"},
    {"s-cut", Kind::number, "kernel transform cut-off"},
    {"panel-tol", Kind::number, "kernel quadrature tolerance"},
    {"tail-order", Kind::integer, "asymptotic terms subtracted from the symbol (1 or 2)"},
    {"axis", Kind::text, "sweep axis: N, c2 or a"},
    {"values", Kind::number_list, "comma-separated sweep values"},
    {"x-min", Kind::number, "first kernel-dump separation"},
    {"x-max", Kind::number, "last kernel-dump separation"},
    {"s-min", Kind::number, "first symbol-dump wavenumber"},
    {"s-max", Kind::number, "last symbol-dump wavenumber"},
    {"count", Kind::integer, "number of dump samples"},
    {"n-values", Kind::integer_list, "comma-separated panel counts for converge"},
    {"flux", Kind::text, "crack-face flux: constant:<value> or a two-column CSV file"},
    {"out", Kind::text, "CSV output path (default: standard output)"},
    {"plot", Kind::text, "SVG chart output path"},
};

const Key* find_key(const std::string& name) {
    for (const Key& k : kKeys) {
        if (name == k.name) return &k;
    }
    return nullptr;
}

double to_number(const std::string& text, const std::string& key) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
        throw UsageError("invalid number for '" + key + "': '" + text + "'");
    }
    return v;
}

long long to_integer(const std::string& text, const std::string& key) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(begin, &end, 10);
    while (end && *end == ' ') ++end;
    if (end == begin || *end != '\0' || errno == ERANGE) {
        throw UsageError("invalid integer for '" + key + "': '" + text + "'");
    }
    return v;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
        items.push_back(item);
    }
    return items;
}

// Command-line text to the JSON representation of the key's kind.
json from_text(const Key& key, const std::string& text) {
    switch (key.kind) {
        case Kind::number:
            return to_number(text, key.name);
        case Kind::integer:
            return to_integer(text, key.name);
        case Kind::number_list: {
            json list = json::array();
            for (const auto& item : split_list(text)) list.push_back(to_number(item, key.name));
            return list;
        }
        case Kind::integer_list: {
            json list = json::array();
            for (const auto& item : split_list(text)) list.push_back(to_integer(item, key.name));
            return list;
        }
        case Kind::text:
            return text;
    }
    return {};
}

// Checks a configuration-file value against the key's kind; lists may also be
// given as comma-separated strings.
json from_file(const Key& key, const json& value) {
    const std::string name = key.name;
    auto bad = [&] { return UsageError("configuration key '" + name + "' has the wrong type"); };
    switch (key.kind) {
        case Kind::number:
            if (!value.is_number()) throw bad();
            return value.get<double>();
        case Kind::integer:
            if (value.is_number_integer()) return value.get<long long>();
            if (value.is_number_float()) {
                const double v = value.get<double>();
                if (v == std::floor(v) && std::abs(v) < 1e15) return static_cast<long long>(v);
            }
            throw bad();
        case Kind::number_list:
        case Kind::integer_list: {
            if (value.is_string()) return from_text(key, value.get<std::string>());
            if (!value.is_array()) throw bad();
            json list = json::array();
            for (const auto& item : value) {
                if (key.kind == Kind::number_list) {
                    if (!item.is_number()) throw bad();
                    list.push_back(item.get<double>());
                } else {
                    if (!item.is_number_integer()) throw bad();
                    list.push_back(item.get<long long>());
                }
            }
            return list;
        }
        case Kind::text:
            if (!value.is_string()) throw bad();
            return value;
    }
    return {};
}

std::map<std::string, json> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open configuration file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("configuration file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw UsageError("configuration file must hold a JSON object");
    std::map<std::string, json> values;
    for (const auto& [name, value] : doc.items()) {
        const Key* key = find_key(name);
        if (!key) throw UsageError("unknown configuration key '" + name + "'");
        values[name] = from_file(*key, value);
    }
    return values;
}

Mode parse_mode(const std::string& text) {
    static const std::pair<const char*, Mode> modes[] = {
        {"solve", Mode::solve},
        {"sweep", Mode::sweep},
        {"kernel-dump", Mode::kernel_dump},
        {"symbol-dump", Mode::symbol_dump},
        {"converge", Mode::converge},
        {"thermo-solve", Mode::thermo_solve},
    };
    for (const auto& [name, mode] : modes) {
        if (text == name) return mode;
    }
    throw UsageError("unknown mode '" + text + "'");
}

crack::SweepAxis parse_axis(const std::string& text) {
    if (text == "N") return crack::SweepAxis::N;
    if (text == "c2") return crack::SweepAxis::c2;
    if (text == "a") return crack::SweepAxis::a;
    throw UsageError("invalid value for 'axis': '" + text + "' (expected N, c2 or a)");
}

std::size_t to_count(long long v, const char* key, long long minimum) {
    if (v < minimum) {
        throw UsageError(std::string("'") + key + "' must be at least " + std::to_string(minimum));
    }
    return static_cast<std::size_t>(v);
}

class Values {
public:
    explicit Values(std::map<std::string, json> v) : v_(std::move(v)) {}

    bool has(const char* key) const { return v_.count(key) > 0; }
    double number(const char* key, double fallback) const {
        return has(key) ? v_.at(key).get<double>() : fallback;
    }
    long long integer(const char* key, long long fallback) const {
        return has(key) ? v_.at(key).get<long long>() : fallback;
    }
    std::string text(const char* key, std::string fallback) const {
        return has(key) ? v_.at(key).get<std::string>() : fallback;
    }
    const json& raw(const char* key) const { return v_.at(key); }

private:
    std::map<std::string, json> v_;
};

void resolve_material(const Values& v, RunConfig& c) {
    static constexpr const char* raw_keys[] = {"lambda", "mu", "alpha", "beta", "xi", "b", "m"};
    const bool direct = v.has("N") || v.has("c2") || v.has("B");
    const bool raw = std::any_of(std::begin(raw_keys), std::end(raw_keys),
                                 [&](const char* k) { return v.has(k); });
    if (direct && raw) {
        throw UsageError(
            "material over-specified: give either N, c2 (and B) or the constants lambda, mu, "
            "alpha, beta, xi (and b, m), not both");
    }

    try {
        if (raw) {
            material::MaterialParams p;
            for (const char* k : {"lambda", "mu", "alpha", "beta", "xi"}) {
                if (!v.has(k)) throw UsageError(std::string("missing material constant '") + k + "'");
            }
            p.lambda = v.number("lambda", 0);
            p.mu = v.number("mu", 0);
            p.alpha = v.number("alpha", 0);
            p.beta = v.number("beta", 0);
            p.xi = v.number("xi", 0);
            if (v.has("m") && !v.has("b")) {
                throw UsageError("material constant 'm' given without 'b'");
            }
            if (v.has("b")) p.thermal = material::ThermalConstants{v.number("b", 0), v.number("m", 0)};
            const auto groups = material::derive_groups(p);
            c.spec = symbol::SymbolSpec(groups.c2, groups.N);
            c.B = groups.B;
            c.material = p;
        } else {
            c.spec = symbol::SymbolSpec(v.number("c2", 0.2), v.number("N", 0.0));
            if (v.has("B")) c.B = v.number("B", 0);
        }
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
}

void validate(RunConfig& c) {
    try {
        c.kernel.validate();
        switch (c.mode) {
            case Mode::solve:
            case Mode::sweep:
            case Mode::converge:
            case Mode::thermo_solve:
                crack::CrackProblem{c.spec, c.a, c.load}.validate();
                break;
            default:
                break;
        }
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
    if ((c.mode == Mode::solve || c.mode == Mode::sweep || c.mode == Mode::thermo_solve) &&
        c.n < 50) {
        throw UsageError("'n' must be at least 50");
    }
    if (c.mode == Mode::converge) {
        if (c.n_values.empty()) throw UsageError("'n-values' must not be empty");
        for (auto n : c.n_values) {
            if (n < 50) throw UsageError("every entry of 'n-values' must be at least 50");
        }
    }
    if (c.mode == Mode::kernel_dump) {
        if (!(c.x_min > 0.0 && c.x_min <= c.x_max && c.x_max <= kernel::kMaxSeparation)) {
            throw UsageError("kernel-dump needs 0 < x-min <= x-max <= 100");
        }
    }
    if (c.mode == Mode::symbol_dump && !(c.s_min >= 0.0 && c.s_min <= c.s_max)) {
        throw UsageError("symbol-dump needs 0 <= s-min <= s-max");
    }
    if (c.mode == Mode::thermo_solve && !c.B) {
        throw UsageError("thermo-solve needs 'B' or the material constant 'b'");
    }
}

}  // namespace

std::optional<RunConfig> parse_config(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Plane-strain crack in a porous (Cowin-Nunziato) elastic medium", "voidcrack"};
    app.set_help_flag("-h,--help", "print this help and exit");

    std::string mode_text;
    std::string config_path;
    std::map<std::string, std::string> flag_text;
    std::map<std::string, CLI::Option*> flags;
    app.add_option("mode", mode_text,
                   "solve | sweep | kernel-dump | symbol-dump | converge | thermo-solve")
        ->required();
    app.add_option("--config", config_path, "JSON file with option values; flags take precedence");
    for (const Key& k : kKeys) {
        flags[k.name] = app.add_option(std::string("--") + k.name, flag_text[k.name], k.help);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    std::map<std::string, json> merged;
    if (!config_path.empty()) merged = read_config_file(config_path);
    for (const Key& k : kKeys) {
        if (flags[k.name]->count() > 0) merged[k.name] = from_text(k, flag_text[k.name]);
    }
    const Values v(std::move(merged));

    RunConfig c;
    c.mode = parse_mode(mode_text);
    resolve_material(v, c);
    c.a = v.number("a", c.a);
    c.load = v.number("load", c.load);
    c.n = to_count(v.integer("n", static_cast<long long>(c.n)), "n", 0);
    c.kernel.s_cut = v.number("s-cut", c.kernel.s_cut);
    c.kernel.panel_tol = v.number("panel-tol", c.kernel.panel_tol);
    c.kernel.tail_order = static_cast<int>(v.integer("tail-order", c.kernel.tail_order));
    c.axis = parse_axis(v.text("axis", "N"));
    if (v.has("values")) c.values = v.raw("values").get<std::vector<double>>();
    else if (c.mode == Mode::sweep) throw UsageError("sweep needs 'values'");
    c.x_min = v.number("x-min", c.x_min);
    c.x_max = v.number("x-max", c.x_max);
    c.s_min = v.number("s-min", c.s_min);
    c.s_max = v.number("s-max", c.s_max);
    c.count = to_count(v.integer("count", static_cast<long long>(c.count)), "count", 1);
    if (v.has("n-values")) {
        c.n_values.clear();
        for (long long n : v.raw("n-values").get<std::vector<long long>>()) {
            c.n_values.push_back(to_count(n, "n-values", 0));
        }
    }
    c.flux = v.text("flux", c.flux);
    if (v.has("out")) c.out = v.text("out", "");
    if (v.has("plot")) c.plot = v.text("plot", "");
    validate(c);
    return c;
}

std::string_view mode_name(Mode mode) noexcept {
    switch (mode) {
        case Mode::solve:
            return "solve";
        case Mode::sweep:
            return "sweep";
        case Mode::kernel_dump:
            return "kernel-dump";
        case Mode::symbol_dump:
            return "symbol-dump";
        case Mode::converge:
            return "converge";
        case Mode::thermo_solve:
            return "thermo-solve";
    }
    return "?";
}

}  // namespace voidcrack::cli
