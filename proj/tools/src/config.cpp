#include "invcompact_cli/config.hpp"

#include "invcompact/error.hpp"
#include "invcompact_cli/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace invcompact::cli {

namespace {

[[noreturn]] void field_error(std::string_view field, const std::string& message)
{
    throw Error(ErrorCode::ConfigInvalid, "field '" + std::string(field) + "': " + message);
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = value.find(',', start);
        parts.push_back(trim(value.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            return parts;
        }
        start = comma + 1;
    }
}

double real_value(std::string_view field, std::string_view text)
{
    double v = 0.0;
    try {
        v = parse_real(trim(text));
    } catch (const std::invalid_argument&) {
        field_error(field, "expected a number, got '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) {
        field_error(field, "must be finite");
    }
    return v;
}

std::size_t count_value(std::string_view field, std::string_view text)
{
    const double v = real_value(field, text);
    if (v < 0.0 || v != std::floor(v) || v > 1e9) {
        field_error(field, "expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return static_cast<std::size_t>(v);
}

std::array<double, 2> interval_value(std::string_view field, std::string_view text)
{
    const auto parts = split_list(text);
    if (parts.size() != 2) {
        field_error(field, "expected 'lo,hi'");
    }
    const std::array<double, 2> d{real_value(field, parts[0]), real_value(field, parts[1])};
    if (!(d[1] > d[0])) {
        field_error(field, "needs lo < hi");
    }
    return d;
}

Scheme scheme_value(std::string_view field, std::string_view text)
{
    const auto s = parse_scheme(trim(text));
    if (!s) {
        field_error(field, "unknown scheme '" + std::string(text) +
                               "' (expected ftcs, comp, sym, sym1 or sym2)");
    }
    return *s;
}

std::string_view last_value(const ConfigEntries& entries, std::string_view key)
{
    std::string_view found;
    for (const auto& [k, v] : entries) {
        if (k == key) {
            found = v;
        }
    }
    return found;
}

} // namespace

ConfigEntries parse_config_text(std::string_view text)
{
    ConfigEntries entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
            throw Error(ErrorCode::ConfigInvalid,
                        "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        entries.emplace_back(std::string(trim(line.substr(0, eq))),
                             std::string(trim(line.substr(eq + 1))));
    }
    return entries;
}

ConfigEntries read_config_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ConfigInvalid, "cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::pair<std::string, std::string> parse_override(std::string_view arg)
{
    const std::size_t eq = arg.find('=');
    if (eq == std::string_view::npos || trim(arg.substr(0, eq)).empty()) {
        throw Error(ErrorCode::ConfigInvalid,
                    "override '" + std::string(arg) + "' is not of the form key=value");
    }
    return {std::string(trim(arg.substr(0, eq))), std::string(trim(arg.substr(eq + 1)))};
}

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys{
        "pde",   "scheme", "schemes", "domain", "y_domain", "n",          "ny",
        "tau",   "t_final", "alpha",  "beta",   "nu",       "sigma",      "L",
        "galilean_c", "sizes", "c_values", "output"};
    return keys;
}

RunConfig resolve_config(const ConfigEntries& entries)
{
    const auto& keys = config_keys();
    for (const auto& [k, v] : entries) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            field_error(k, "unknown key");
        }
    }

    Pde pde = Pde::Ibe;
    if (const auto text = last_value(entries, "pde"); !text.empty()) {
        const auto p = parse_pde(text);
        if (!p) {
            field_error("pde", "unknown pde '" + std::string(text) +
                                   "' (expected ibe, ade1d, vbe or ade2d)");
        }
        pde = *p;
    }
    Scheme scheme = is_two_dimensional(pde) ? Scheme::Sym2 : Scheme::Sym;
    if (const auto text = last_value(entries, "scheme"); !text.empty()) {
        scheme = scheme_value("scheme", text);
    }
    if (!scheme_supports(pde, scheme)) {
        field_error("scheme", "'" + std::string(to_string(scheme)) + "' does not apply to pde '" +
                                  std::string(to_string(pde)) + "'");
    }

    RunConfig config;
    ExperimentSpec& spec = config.spec;
    spec = default_spec(pde, scheme);

    for (const auto& [key, value] : entries) {
        if (key == "pde" || key == "scheme") {
            continue;
        } else if (key == "schemes") {
            config.schemes.clear();
            for (const auto part : split_list(value)) {
                const Scheme s = scheme_value(key, part);
                if (!scheme_supports(pde, s)) {
                    field_error(key, "'" + std::string(part) + "' does not apply to pde '" +
                                         std::string(to_string(pde)) + "'");
                }
                config.schemes.push_back(s);
            }
        } else if (key == "domain") {
            spec.x_domain = interval_value(key, value);
        } else if (key == "y_domain") {
            spec.y_domain = interval_value(key, value);
        } else if (key == "n") {
            spec.nx = count_value(key, value);
        } else if (key == "ny") {
            spec.ny = count_value(key, value);
        } else if (key == "tau") {
            spec.tau = real_value(key, value);
        } else if (key == "t_final") {
            spec.t_final = real_value(key, value);
        } else if (key == "alpha") {
            spec.params.alpha = real_value(key, value);
        } else if (key == "beta") {
            spec.params.beta = real_value(key, value);
        } else if (key == "nu") {
            spec.params.nu = real_value(key, value);
        } else if (key == "sigma") {
            spec.params.sigma = real_value(key, value);
        } else if (key == "L") {
            spec.params.L = real_value(key, value);
        } else if (key == "galilean_c") {
            spec.galilean_c = real_value(key, value);
        } else if (key == "sizes") {
            config.sizes.clear();
            for (const auto part : split_list(value)) {
                config.sizes.push_back(count_value(key, part));
            }
        } else if (key == "c_values") {
            config.c_values.clear();
            for (const auto part : split_list(value)) {
                config.c_values.push_back(real_value(key, part));
            }
        } else if (key == "output") {
            config.output_path = value;
        }
    }

    // A single n sets both axes of a 2D grid unless ny is given.
    if (is_two_dimensional(pde) && !last_value(entries, "n").empty() &&
        last_value(entries, "ny").empty()) {
        spec.ny = spec.nx;
    }
    if (spec.nx < 5) {
        field_error("n", "must be at least 5");
    }
    if (is_two_dimensional(pde) && spec.ny != 0 && spec.ny < 5) {
        field_error("ny", "must be at least 5");
    }
    for (const std::size_t s : config.sizes) {
        if (s < 5) {
            field_error("sizes", "every size must be at least 5");
        }
    }
    if (!(spec.tau > 0.0)) {
        field_error("tau", "must be positive");
    }
    if (!(spec.t_final >= 0.0)) {
        field_error("t_final", "must be non-negative");
    }
    if (!(spec.params.nu >= 0.0)) {
        field_error("nu", "must be non-negative");
    }
    if (!(spec.params.sigma > 0.0)) {
        field_error("sigma", "must be positive");
    }
    if (!(spec.params.L > 0.0)) {
        field_error("L", "must be positive");
    }
    if (spec.galilean_c && pde != Pde::Vbe) {
        field_error("galilean_c", "applies to pde 'vbe' only");
    }
    spec.validate();
    return config;
}

std::vector<Scheme> effective_schemes(const RunConfig& config)
{
    if (!config.schemes.empty()) {
        return config.schemes;
    }
    std::vector<Scheme> all;
    for (const Scheme s : {Scheme::Ftcs, Scheme::Comp, Scheme::Sym, Scheme::Sym1, Scheme::Sym2}) {
        if (scheme_supports(config.spec.pde, s)) {
            all.push_back(s);
        }
    }
    return all;
}

} // namespace invcompact::cli
