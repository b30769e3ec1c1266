#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace harmonium {

// ---------------------------------------------------------------------------
// Runtime configuration.  Loaded from a flat key=value file (path in the
// HARMONIUM_CONFIG environment variable or --config); command-line flags
// override file values, file values override these defaults.
// ---------------------------------------------------------------------------
struct Config {
    Rational reference_note{132}; // Hz
    Rational reference_time{4};   // seconds per whole-note unit
    int sample_rate = 44100;      // Hz
    std::uint64_t search_budget = 10'000'000;
    int cadence_maxlen = 3;

    void validate() const {
        if (reference_note <= 0 || reference_time <= 0 || sample_rate <= 0)
            throw NonPositive("config: reference_note, reference_time and "
                              "sample_rate must be positive");
        if (search_budget == 0 || cadence_maxlen < 1)
            throw NonPositive("config: search_budget and cadence_maxlen "
                              "must be positive");
    }
};

namespace detail {
inline std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
} // namespace detail

// Applies key=value lines to a config; '#' starts a comment.
inline Config load_config(std::istream& in, Config base = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = detail::trimmed(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw IoError("config line " + std::to_string(lineno) +
                          ": expected key=value, got \"" + line + "\"");
        std::string key = detail::trimmed(line.substr(0, eq));
        std::string value = detail::trimmed(line.substr(eq + 1));
        if (key == "reference_note")
            base.reference_note = parse_rational(value);
        else if (key == "reference_time")
            base.reference_time = parse_rational(value);
        else if (key == "sample_rate")
            base.sample_rate = std::stoi(value);
        else if (key == "search_budget")
            base.search_budget = std::stoull(value);
        else if (key == "cadence_maxlen")
            base.cadence_maxlen = std::stoi(value);
        else
            throw IoError("config line " + std::to_string(lineno) +
                          ": unknown key \"" + key + "\"");
    }
    base.validate();
    return base;
}

inline Config load_config_file(const std::string& path, Config base = {}) {
    std::ifstream in(path);
    if (!in)
        throw IoError("config: cannot open \"" + path + "\"");
    return load_config(in, base);
}

// Default config, overlaid with the HARMONIUM_CONFIG file when set.
inline Config config_from_env() {
    Config cfg;
    if (const char* path = std::getenv("HARMONIUM_CONFIG"))
        cfg = load_config_file(path, cfg);
    return cfg;
}

// ---------------------------------------------------------------------------
// Note-duration vocabulary: fractions of reference_time.
// ---------------------------------------------------------------------------
inline const std::map<std::string, Rational>& duration_vocabulary() {
    static const std::map<std::string, Rational> names{
        {"semibreve", Rational(1)},           {"minim", Rational(1, 2)},
        {"crotchet", Rational(1, 4)},         {"quaver", Rational(1, 8)},
        {"semiquaver", Rational(1, 16)},      {"demisemiquaver", Rational(1, 32)},
        {"hemidemisemiquaver", Rational(1, 64)},
    };
    return names;
}

// A duration is either a vocabulary name or a rational fraction literal.
inline Rational parse_duration(const std::string& text) {
    const auto& vocab = duration_vocabulary();
    if (auto it = vocab.find(detail::trimmed(text)); it != vocab.end())
        return it->second;
    Rational d = parse_rational(text);
    if (d <= 0)
        throw NonPositive("duration must be positive: " + text);
    return d;
}

} // namespace harmonium
