#include "twinslit/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twinslit {

namespace {

constexpr double kMuchLess = 0.01;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view key, std::string_view value, int line_no) {
    const std::string text(value);
    char* end = nullptr;
    const double parsed = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(parsed)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": value for '" << key
            << "' is not a finite number: '" << text << "'";
        throw ConfigParseError(msg.str());
    }
    return parsed;
}

int parse_steps(std::string_view key, std::string_view value, int line_no) {
    const double parsed = parse_number(key, value, line_no);
    const int steps = static_cast<int>(parsed);
    if (parsed != steps || steps < 1) {
        std::ostringstream msg;
        msg << "line " << line_no << ": '" << key
            << "' must be a positive integer, got '" << value << "'";
        throw ConfigParseError(msg.str());
    }
    return steps;
}

} // namespace

bool ExperimentConfig::approximation_valid() const {
    return h <= kMuchLess * l && 0.5 * d <= kMuchLess * h;
}

void ExperimentConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(name) + " must be positive and finite");
    };
    positive(k, "k");
    positive(h, "h");
    positive(l, "l");
    positive(m, "m");
    if (!(d >= 0.0) || !std::isfinite(d))
        throw std::invalid_argument("d must be >= 0 and finite");
    if (!std::isfinite(u1) || !std::isfinite(u2) || u2 < u1)
        throw std::invalid_argument("u interval must satisfy u1 <= u2");
}

void GridSpec::validate() const {
    if (!std::isfinite(y_min) || !std::isfinite(y_max) || y_max < y_min)
        throw std::invalid_argument("grid y range must satisfy y_min <= y_max");
    if (!std::isfinite(z_min) || !std::isfinite(z_max) || z_max < z_min)
        throw std::invalid_argument("grid z range must satisfy z_min <= z_max");
    if (y_steps < 1 || z_steps < 1)
        throw std::invalid_argument("grid steps must be >= 1");
}

RunConfig parse_run_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> values;
    std::map<std::string, int, std::less<>> lines;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'key = value', got '" << line << "'";
            throw ConfigParseError(msg.str());
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            std::ostringstream msg;
            msg << "line " << line_no << ": empty key or value";
            throw ConfigParseError(msg.str());
        }
        if (values.count(key)) {
            std::ostringstream msg;
            msg << "line " << line_no << ": duplicate key '" << key << "'";
            throw ConfigParseError(msg.str());
        }
        values[key] = value;
        lines[key] = line_no;
    }

    static const char* kGeometryKeys[] = {"k", "h", "l", "m", "d"};
    static const char* kOptionalGeometryKeys[] = {"u1", "u2"};
    static const char* kGridKeys[] = {"y_min", "y_max", "y_steps",
                                      "z_min", "z_max", "z_steps"};

    auto any_of_keys = [](std::string_view key, const char* const* begin,
                          const char* const* end) {
        return std::find_if(begin, end, [key](const char* candidate) {
                   return key == candidate;
               }) != end;
    };
    for (const auto& [key, value] : values) {
        const bool known =
            key == "method" ||
            any_of_keys(key, std::begin(kGeometryKeys), std::end(kGeometryKeys)) ||
            any_of_keys(key, std::begin(kOptionalGeometryKeys),
                        std::end(kOptionalGeometryKeys)) ||
            any_of_keys(key, std::begin(kGridKeys), std::end(kGridKeys));
        if (!known) {
            std::ostringstream msg;
            msg << "line " << lines[key] << ": unknown key '" << key << "'";
            throw ConfigParseError(msg.str());
        }
    }

    RunConfig run;
    auto number = [&](const std::string& key) {
        const auto it = values.find(key);
        if (it == values.end())
            throw ConfigParseError("missing required key '" + key + "'");
        return parse_number(key, it->second, lines[key]);
    };
    run.experiment.k = number("k");
    run.experiment.h = number("h");
    run.experiment.l = number("l");
    run.experiment.m = number("m");
    run.experiment.d = number("d");
    if (values.count("u1")) run.experiment.u1 = parse_number("u1", values["u1"], lines["u1"]);
    if (values.count("u2")) run.experiment.u2 = parse_number("u2", values["u2"], lines["u2"]);

    try {
        run.experiment.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigParseError(std::string("invalid geometry: ") + e.what());
    }

    int grid_keys_present = 0;
    for (const char* key : kGridKeys) grid_keys_present += values.count(key) ? 1 : 0;
    if (grid_keys_present == static_cast<int>(std::size(kGridKeys))) {
        GridSpec spec;
        spec.y_min = parse_number("y_min", values["y_min"], lines["y_min"]);
        spec.y_max = parse_number("y_max", values["y_max"], lines["y_max"]);
        spec.y_steps = parse_steps("y_steps", values["y_steps"], lines["y_steps"]);
        spec.z_min = parse_number("z_min", values["z_min"], lines["z_min"]);
        spec.z_max = parse_number("z_max", values["z_max"], lines["z_max"]);
        spec.z_steps = parse_steps("z_steps", values["z_steps"], lines["z_steps"]);
        try {
            spec.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigParseError(std::string("invalid grid: ") + e.what());
        }
        run.grid = spec;
    } else if (grid_keys_present != 0) {
        throw ConfigParseError(
            "grid block incomplete: need all of y_min y_max y_steps z_min z_max z_steps");
    }

    if (values.count("method")) run.method = values["method"];
    return run;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigParseError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_run_config(buffer.str());
    } catch (const ConfigParseError& e) {
        throw ConfigParseError(path + ": " + e.what());
    }
}

} // namespace twinslit
