#pragma once

#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcarrival/errors.hpp"
#include "qcarrival/quadrature.hpp"
#include "qcarrival/twobody.hpp"
#include "qcarrival/units.hpp"

// INI-style scenario configuration: [section] headers and key = value lines,
// full-line comments starting with # or ;. Unknown sections, unknown keys and
// duplicate keys are rejected with the offending line number so a typo cannot
// silently fall back to a default.

namespace qcarrival {

enum class RunMethod { exact, stationary_phase, classical, all };

inline const char* run_method_name(RunMethod m) {
    switch (m) {
    case RunMethod::exact: return "exact";
    case RunMethod::stationary_phase: return "stationary-phase";
    case RunMethod::classical: return "classical";
    default: return "all";
    }
}

struct TwoBodyBlock {
    double hbar_u = 1.0;
    double mass_u = 0.5;
    GaussianLine a{1.0, 2.0, -10.0};
    GaussianLine b{1.0, 1.5, -8.0};
    std::vector<Statistics> statistics{Statistics::boson, Statistics::fermion};
    double x_d = 0.0;
    std::vector<double> times{0.0, 1.0, 2.0};
    double x_min = -20.0;
    double x_max = 15.0;
    std::size_t x_samples = 701;
    double t_min = 0.0;
    double t_max = 6.0;
    std::size_t t_samples = 601;
};

struct ScenarioConfig {
    // packet
    double x_c = -50.0;  // angstrom
    double sigma0 = 2.0; // angstrom
    double alpha = 0.0;
    std::optional<double> u_frac; // launch speed, units of c
    std::optional<double> k0;     // 1/angstrom
    std::optional<double> mass;   // MeV/c^2
    std::optional<std::vector<double>> mass_sweep;
    std::optional<std::vector<double>> alphas;

    // barrier
    double V0 = 5.0; // eV
    std::optional<double> width; // angstrom; scenario-dependent fallback

    // detector / emission windows
    double X = 75.0;  // angstrom
    double t0 = 11.07; // fs, density snapshot time
    double x_min = 40.0;
    double x_max = 160.0;
    std::size_t x_samples = 601;
    double t_min = 6.0;
    double t_max = 14.0;
    std::size_t t_samples = 401;
    std::optional<double> t_hint;  // arrival-window end guess, fs
    std::size_t samples = 1025;    // arrival series length

    RunMethod method = RunMethod::all;
    TwoBodyBlock twobody;

    // output
    std::string directory = "out";
    int precision = 17; // significant digits in emitted tables

    double wavenumber(double mass_mev) const {
        if (k0)
            return *k0;
        return wavenumber_from_velocity(mass_mev, u_frac.value_or(4.52e-3));
    }

    double barrier_width(double fallback) const { return width ? *width : fallback; }

    std::vector<double> mass_list(const std::vector<double>& fallback) const {
        if (mass)
            return {*mass};
        if (mass_sweep)
            return *mass_sweep;
        return fallback;
    }

    std::vector<double> alpha_list(const std::vector<double>& fallback) const {
        return alphas ? *alphas : fallback;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::string line_tag(int line) { return "line " + std::to_string(line) + ": "; }

inline double parse_number(const std::string& value, int line, const std::string& key) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw config_error(line_tag(line) + "key '" + key + "' needs a number, got '" + value
                           + "'");
    return v;
}

inline std::size_t parse_count(const std::string& value, int line, const std::string& key) {
    const double v = parse_number(value, line, key);
    if (!(v >= 0.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
        throw config_error(line_tag(line) + "key '" + key
                           + "' needs a non-negative integer, got '" + value + "'");
    return static_cast<std::size_t>(v);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(trim(item));
    return out;
}

inline std::vector<double> parse_number_list(const std::string& value, int line,
                                             const std::string& key) {
    std::vector<double> out;
    for (const std::string& item : split(value, ','))
        out.push_back(parse_number(item, line, key));
    if (out.empty())
        throw config_error(line_tag(line) + "key '" + key + "' needs at least one value");
    return out;
}

// Either "lo:hi:n" (log-spaced) or an explicit comma list.
inline std::vector<double> parse_sweep(const std::string& value, int line,
                                       const std::string& key) {
    if (value.find(':') == std::string::npos)
        return parse_number_list(value, line, key);
    const std::vector<std::string> parts = split(value, ':');
    if (parts.size() != 3)
        throw config_error(line_tag(line) + "key '" + key
                           + "' needs lo:hi:n or a comma list, got '" + value + "'");
    const double lo = parse_number(parts[0], line, key);
    const double hi = parse_number(parts[1], line, key);
    const std::size_t n = parse_count(parts[2], line, key);
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw config_error(line_tag(line) + "key '" + key
                           + "' needs 0 < lo < hi and n >= 2, got '" + value + "'");
    return logspace(lo, hi, n);
}

inline Statistics parse_statistics(const std::string& token, int line) {
    if (token == "BE")
        return Statistics::boson;
    if (token == "FD")
        return Statistics::fermion;
    if (token == "MB")
        return Statistics::maxwell_boltzmann;
    throw config_error(line_tag(line) + "unknown statistics '" + token
                       + "' (expected BE, FD or MB)");
}

inline RunMethod parse_method(const std::string& token, int line) {
    if (token == "exact")
        return RunMethod::exact;
    if (token == "stationary-phase")
        return RunMethod::stationary_phase;
    if (token == "classical")
        return RunMethod::classical;
    if (token == "all")
        return RunMethod::all;
    throw config_error(line_tag(line) + "unknown method '" + token
                       + "' (expected exact, stationary-phase, classical or all)");
}

} // namespace detail

// Semantic checks that need the whole file (exclusive pairs, positivity).
inline void validate_config(const ScenarioConfig& cfg) {
    if (cfg.u_frac && cfg.k0)
        throw config_error("packet.u and packet.k0 are mutually exclusive; give exactly one");
    if (cfg.mass && cfg.mass_sweep)
        throw config_error("packet.mass and packet.mass_sweep are mutually exclusive; "
                           "give exactly one");
    if (!(cfg.sigma0 > 0.0))
        throw config_error("packet.sigma0 must be positive");
    if (cfg.u_frac && !(*cfg.u_frac > 0.0))
        throw config_error("packet.u must be positive");
    if (cfg.k0 && !(*cfg.k0 > 0.0))
        throw config_error("packet.k0 must be positive");
    if (cfg.mass && !(*cfg.mass > 0.0))
        throw config_error("packet.mass must be positive");
    if (cfg.mass_sweep)
        for (const double m : *cfg.mass_sweep)
            if (!(m > 0.0))
                throw config_error("packet.mass_sweep entries must be positive");
    if (!(cfg.V0 >= 0.0))
        throw config_error("barrier.V0 must be non-negative");
    if (cfg.width && !(*cfg.width >= 0.0))
        throw config_error("barrier.a must be non-negative");
    if (!(cfg.x_max > cfg.x_min) || !(cfg.t_max > cfg.t_min))
        throw config_error("detector window bounds must be increasing");
    if (cfg.x_samples < 2 || cfg.t_samples < 2)
        throw config_error("detector window sample counts must be at least 2");
    if (cfg.samples < 8)
        throw config_error("detector.samples must be at least 8");
    if (cfg.t_hint && !(*cfg.t_hint > 0.0))
        throw config_error("detector.t_hint must be positive");
    if (!(cfg.t0 >= 0.0))
        throw config_error("detector.t0 must be non-negative");
    if (cfg.precision < 1 || cfg.precision > 17)
        throw config_error("output.precision must lie in [1, 17]");

    const TwoBodyBlock& tb = cfg.twobody;
    if (!(tb.hbar_u > 0.0) || !(tb.mass_u > 0.0))
        throw config_error("twobody.hbar and twobody.mass must be positive");
    if (!(tb.a.sigma0 > 0.0) || !(tb.b.sigma0 > 0.0))
        throw config_error("twobody packet widths must be positive");
    if (tb.statistics.empty())
        throw config_error("twobody.statistics must name at least one of BE, FD, MB");
    if (tb.times.empty())
        throw config_error("twobody.times must list at least one snapshot time");
    if (!(tb.x_max > tb.x_min) || !(tb.t_max > tb.t_min))
        throw config_error("twobody window bounds must be increasing");
    if (tb.x_samples < 3 || tb.t_samples < 2)
        throw config_error("twobody window sample counts are too small");
}

inline ScenarioConfig parse_config(std::istream& in) {
    ScenarioConfig cfg;
    std::string section;
    std::string raw;
    int line = 0;
    std::set<std::string> seen;

    while (std::getline(in, raw)) {
        ++line;
        const std::string text = detail::trim(raw);
        if (text.empty() || text[0] == '#' || text[0] == ';')
            continue;

        if (text.front() == '[') {
            if (text.back() != ']')
                throw config_error(detail::line_tag(line) + "unterminated section header '"
                                   + text + "'");
            section = detail::trim(text.substr(1, text.size() - 2));
            if (section != "packet" && section != "barrier" && section != "detector"
                && section != "method" && section != "twobody" && section != "output")
                throw config_error(detail::line_tag(line) + "unknown section '[" + section
                                   + "]'");
            continue;
        }

        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw config_error(detail::line_tag(line) + "expected key = value, got '" + text
                               + "'");
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string value = detail::trim(text.substr(eq + 1));
        if (key.empty())
            throw config_error(detail::line_tag(line) + "empty key");
        if (section.empty())
            throw config_error(detail::line_tag(line) + "key '" + key
                               + "' appears before any [section]");
        if (!seen.insert(section + "." + key).second)
            throw config_error(detail::line_tag(line) + "duplicate key '" + key + "' in ["
                               + section + "]");

        const auto num = [&] { return detail::parse_number(value, line, key); };
        const auto count = [&] { return detail::parse_count(value, line, key); };

        bool known = true;
        if (section == "packet") {
            if (key == "x_c")
                cfg.x_c = num();
            else if (key == "sigma0")
                cfg.sigma0 = num();
            else if (key == "alpha")
                cfg.alpha = num();
            else if (key == "u")
                cfg.u_frac = num();
            else if (key == "k0")
                cfg.k0 = num();
            else if (key == "mass")
                cfg.mass = num();
            else if (key == "mass_sweep")
                cfg.mass_sweep = detail::parse_sweep(value, line, key);
            else if (key == "alphas")
                cfg.alphas = detail::parse_number_list(value, line, key);
            else
                known = false;
        } else if (section == "barrier") {
            if (key == "V0")
                cfg.V0 = num();
            else if (key == "a")
                cfg.width = num();
            else
                known = false;
        } else if (section == "detector") {
            if (key == "X")
                cfg.X = num();
            else if (key == "t0")
                cfg.t0 = num();
            else if (key == "x_min")
                cfg.x_min = num();
            else if (key == "x_max")
                cfg.x_max = num();
            else if (key == "x_samples")
                cfg.x_samples = count();
            else if (key == "t_min")
                cfg.t_min = num();
            else if (key == "t_max")
                cfg.t_max = num();
            else if (key == "t_samples")
                cfg.t_samples = count();
            else if (key == "t_hint")
                cfg.t_hint = num();
            else if (key == "samples")
                cfg.samples = count();
            else
                known = false;
        } else if (section == "method") {
            if (key == "value")
                cfg.method = detail::parse_method(value, line);
            else
                known = false;
        } else if (section == "twobody") {
            TwoBodyBlock& tb = cfg.twobody;
            if (key == "hbar")
                tb.hbar_u = num();
            else if (key == "mass")
                tb.mass_u = num();
            else if (key == "sigma_a")
                tb.a.sigma0 = num();
            else if (key == "k_a")
                tb.a.k = num();
            else if (key == "x_a")
                tb.a.x_c = num();
            else if (key == "sigma_b")
                tb.b.sigma0 = num();
            else if (key == "k_b")
                tb.b.k = num();
            else if (key == "x_b")
                tb.b.x_c = num();
            else if (key == "statistics") {
                tb.statistics.clear();
                for (const std::string& token : detail::split(value, ','))
                    tb.statistics.push_back(detail::parse_statistics(token, line));
            } else if (key == "x_d")
                tb.x_d = num();
            else if (key == "times")
                tb.times = detail::parse_number_list(value, line, key);
            else if (key == "x_min")
                tb.x_min = num();
            else if (key == "x_max")
                tb.x_max = num();
            else if (key == "x_samples")
                tb.x_samples = count();
            else if (key == "t_min")
                tb.t_min = num();
            else if (key == "t_max")
                tb.t_max = num();
            else if (key == "t_samples")
                tb.t_samples = count();
            else
                known = false;
        } else { // output
            if (key == "directory")
                cfg.directory = value;
            else if (key == "precision")
                cfg.precision = static_cast<int>(count());
            else
                known = false;
        }
        if (!known)
            throw config_error(detail::line_tag(line) + "unknown key '" + key + "' in ["
                               + section + "]");
    }

    validate_config(cfg);
    return cfg;
}

inline ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

} // namespace qcarrival
