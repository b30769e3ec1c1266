#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "consonance.hpp"
#include "euler.hpp"
#include "modulation.hpp"
#include "pcset.hpp"
#include "pythag.hpp"
#include "rational.hpp"
#include "scales.hpp"
#include "tonality.hpp"

// Rational lives in a foreign namespace, so it needs an adl_serializer
// specialization rather than a free to_json.
namespace nlohmann {
template <>
struct adl_serializer<harmonium::Rational> {
    static void to_json(json& j, const harmonium::Rational& r) {
        j = r.str();
    }
    static void from_json(const json& j, harmonium::Rational& r) {
        r = harmonium::parse_rational(j.get<std::string>());
    }
};
} // namespace nlohmann

namespace harmonium {

// nlohmann::json hooks (found by argument-dependent lookup).
inline void to_json(nlohmann::json& j, const PytLetter& l) {
    j = nlohmann::json{{"pc", l.pc}, {"cycle", l.cycle}};
}

inline void from_json(const nlohmann::json& j, PytLetter& l) {
    j.at("pc").get_to(l.pc);
    j.at("cycle").get_to(l.cycle);
}

inline void to_json(nlohmann::json& j, const EulerPoint& p) {
    j = nlohmann::json{{"e2", p.e2.str()}, {"e3", p.e3.str()},
                       {"e5", p.e5.str()}};
}

inline void to_json(nlohmann::json& j, const TIMap& m) {
    j = nlohmann::json{{"invert", m.invert}, {"shift", m.shift}};
}

template <class L>
void to_json(nlohmann::json& j, const BasicTonality<L>& t) {
    j = nlohmann::json{{"word", t.word},
                       {"level", t.level},
                       {"degree_chords", t.degree_chords}};
}

template <class L>
void to_json(nlohmann::json& j, const PivotalDegree<L>& p) {
    j = nlohmann::json{{"chord", p.chord},
                       {"degree_in_first", p.degree_in_first},
                       {"degree_in_second", p.degree_in_second}};
}

template <class L>
void to_json(nlohmann::json& j, const Cadence<L>& c) {
    j = nlohmann::json{{"degrees", c.degrees}, {"chords", c.chords}};
}

template <class L>
void to_json(nlohmann::json& j, const BasicModulation<L>& m) {
    j = nlohmann::json{{"pivot", m.pivot}, {"cadence", m.cadence}};
}

namespace io {

// ---------------------------------------------------------------------------
// Brace-list renderers matching the printed table convention.
// ---------------------------------------------------------------------------
inline std::string letter_str(Letter l) { return std::to_string(l); }

inline std::string letter_str(const PytLetter& l) {
    return "{" + std::to_string(l.pc) + "," + std::to_string(l.cycle) + "}";
}

template <class L>
std::string chord_str(const std::vector<L>& chord) {
    std::string out = "{";
    for (std::size_t i = 0; i < chord.size(); ++i) {
        if (i)
            out += ",";
        out += letter_str(chord[i]);
    }
    return out + "}";
}

template <class L>
std::string hw_str(const BasicHarmonicWord<L>& hw) {
    std::string out = "{";
    for (std::size_t i = 0; i < hw.size(); ++i) {
        if (i)
            out += ",";
        out += chord_str(hw[i]);
    }
    return out + "}";
}

inline std::string degrees_str(const std::vector<int>& degrees) {
    return chord_str(degrees);
}

// "3/2 (1.5)" — exact first, decimal gloss second.
inline std::string freq_str(const Rational& r, unsigned digits = 12) {
    return r.str() + " (" + to_decimal_string(r, digits) + ")";
}

} // namespace io
} // namespace harmonium
