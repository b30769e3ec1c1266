#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "pcset.hpp"
#include "rational.hpp"

namespace harmonium {

// ---------------------------------------------------------------------------
// The 5-limit Euler lattice.  A point is a triple of exact rational exponents
// of the primes 2, 3 and 5; its coordination value is 2^e2 * 3^e3 * 5^e5.
// Integer-exponent points are exactly the positive 5-limit rationals.
// ---------------------------------------------------------------------------
struct EulerPoint {
    Rational e2{0};
    Rational e3{0};
    Rational e5{0};

    friend bool operator==(const EulerPoint&, const EulerPoint&) = default;

    EulerPoint operator+(const EulerPoint& o) const {
        return {e2 + o.e2, e3 + o.e3, e5 + o.e5};
    }
    EulerPoint operator-(const EulerPoint& o) const {
        return {e2 - o.e2, e3 - o.e3, e5 - o.e5};
    }
    EulerPoint operator*(const Integer& k) const {
        return {e2 * k, e3 * k, e5 * k};
    }
    EulerPoint operator-() const { return {-e2, -e3, -e5}; }
};

// Intervals are differences of points; same coordinates, same group.
using EulerInterval = EulerPoint;

// Canonical interval basis: the octave, the pure fifth and the pure third
// above the reference note.
inline EulerInterval octave_vector() { return {1, 0, 0}; }   // ratio 2
inline EulerInterval twelfth_vector() { return {0, 1, 0}; }  // ratio 3
inline EulerInterval seventeenth_vector() { return {0, 0, 1}; } // ratio 5

inline bool is_integral(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer integer_part(const Rational& r) {
    return boost::multiprecision::numerator(r) /
           boost::multiprecision::denominator(r);
}

// A point names a rational number exactly when all exponents are integers.
inline bool just_tuned(const EulerPoint& p) {
    return is_integral(p.e2) && is_integral(p.e3) && is_integral(p.e5);
}

// Pythagorean points live in the 3-limit sublattice.
inline bool pyt_tuned(const EulerPoint& p) {
    return is_integral(p.e2) && is_integral(p.e3) && p.e5 == 0;
}

// ---------------------------------------------------------------------------
// Coordination value: exact Rational for integer exponents, double otherwise.
// ---------------------------------------------------------------------------
using Coordination = std::variant<Rational, double>;

inline Rational coordination_ratio(const EulerPoint& p) {
    if (!just_tuned(p))
        throw NotJustTuned(
            "coordination_ratio: exponents must be integers for an exact "
            "ratio");
    Rational r = rational_pow(Rational(2), integer_part(p.e2).convert_to<long long>());
    r *= rational_pow(Rational(3), integer_part(p.e3).convert_to<long long>());
    r *= rational_pow(Rational(5), integer_part(p.e5).convert_to<long long>());
    return r;
}

inline double coordination_real(const EulerPoint& p) {
    return std::exp(to_double(p.e2) * std::log(2.0) +
                    to_double(p.e3) * std::log(3.0) +
                    to_double(p.e5) * std::log(5.0));
}

inline Coordination coordination_value(const EulerPoint& p) {
    if (just_tuned(p))
        return coordination_ratio(p);
    return coordination_real(p);
}

// ---------------------------------------------------------------------------
// The inverse map on positive 5-limit rationals.
// ---------------------------------------------------------------------------
inline EulerPoint point_from_ratio(const Rational& r) {
    if (r <= 0)
        throw NonPositive("point_from_ratio: ratio must be positive");
    auto exponent_of = [](Integer n, const Integer& prime, Integer& left) {
        Integer e = 0;
        while (n % prime == 0) {
            n /= prime;
            ++e;
        }
        left = n;
        return e;
    };
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    EulerPoint p;
    for (const auto& [prime, slot] :
         {std::pair<int, Rational*>{2, &p.e2}, {3, &p.e3}, {5, &p.e5}}) {
        Integer rest_num, rest_den;
        Integer en = exponent_of(num, prime, rest_num);
        Integer ed = exponent_of(den, prime, rest_den);
        *slot = Rational(en - ed);
        num = rest_num;
        den = rest_den;
    }
    if (num != 1 || den != 1)
        throw NotFiveLimit("point_from_ratio: " + r.str() +
                           " has a prime factor outside {2,3,5}");
    return p;
}

// ---------------------------------------------------------------------------
// Pitch in cents.
// ---------------------------------------------------------------------------
inline double pitch_of_point(const EulerPoint& p) {
    return (1200.0 / std::log(2.0)) *
           (to_double(p.e2) * std::log(2.0) + to_double(p.e3) * std::log(3.0) +
            to_double(p.e5) * std::log(5.0));
}

inline double pitch_of_ratio(double nu, double nu_ref) {
    if (!(nu > 0) || !(nu_ref > 0))
        throw NonPositiveFrequency(
            "pitch_of_ratio: frequencies must be positive");
    return 1200.0 * std::log2(nu / nu_ref);
}

inline double pitch_of_ratio(const Rational& nu, const Rational& nu_ref) {
    if (nu <= 0 || nu_ref <= 0)
        throw NonPositiveFrequency(
            "pitch_of_ratio: frequencies must be positive");
    return 1200.0 * std::log2(to_double(nu / nu_ref));
}

// Inverse of pitch_of_ratio for a fixed reference.
inline double frequency_of_pitch(double cents, double nu_ref) {
    if (!(nu_ref > 0))
        throw NonPositiveFrequency(
            "frequency_of_pitch: reference must be positive");
    return nu_ref * std::exp2(cents / 1200.0);
}

// ---------------------------------------------------------------------------
// Tuned-subset classification.
// ---------------------------------------------------------------------------
struct ClassifyParams {
    long long n = 12;                       // for the equal-tempered test
    std::array<long long, 3> ns{12, 12, 12}; // componentwise denominators
};

namespace detail {
inline bool denominator_divides(const Rational& e, long long n) {
    return n > 0 && boost::multiprecision::denominator(Rational(e * n)) == 1;
}
} // namespace detail

// Returns the set of labels this point satisfies: "just", "pyt",
// "<n>-tempered" (e3 = e5 = 0, e2 a multiple of 1/n) and
// "<n1>,<n2>,<n3>-tempered" (componentwise multiples of 1/n_i).
inline std::vector<std::string> classify_point(const EulerPoint& p,
                                               const ClassifyParams& params =
                                                   {}) {
    std::vector<std::string> flags;
    if (just_tuned(p))
        flags.push_back("just");
    if (pyt_tuned(p))
        flags.push_back("pyt");
    if (p.e3 == 0 && p.e5 == 0 &&
        detail::denominator_divides(p.e2, params.n))
        flags.push_back(std::to_string(params.n) + "-tempered");
    if (detail::denominator_divides(p.e2, params.ns[0]) &&
        detail::denominator_divides(p.e3, params.ns[1]) &&
        detail::denominator_divides(p.e5, params.ns[2]))
        flags.push_back(std::to_string(params.ns[0]) + "," +
                        std::to_string(params.ns[1]) + "," +
                        std::to_string(params.ns[2]) + "-tempered");
    return flags;
}

// ---------------------------------------------------------------------------
// The two commas.
// ---------------------------------------------------------------------------
struct Comma {
    EulerInterval vector;
    Rational ratio;
    double cents;
};

struct CommaPair {
    Comma fifth;  // twelve fifths minus seven octaves
    Comma third;  // the syntonic comma
};

inline CommaPair commas() {
    const EulerInterval o = octave_vector();
    const EulerInterval f = twelfth_vector() - octave_vector(); // pure fifth
    const EulerInterval t =
        seventeenth_vector() - octave_vector() * 2; // pure third
    EulerInterval kf = -(o * 7) + f * 12;
    EulerInterval kt = o * 2 - f * 4 + t;
    return {{kf, coordination_ratio(kf), pitch_of_point(kf)},
            {kt, coordination_ratio(kt), pitch_of_point(kt)}};
}

// ---------------------------------------------------------------------------
// Gradus suavitatis.
// ---------------------------------------------------------------------------
inline Integer gradus(const Integer& n) {
    if (n <= 0)
        throw NonPositive("gradus: argument must be positive");
    Integer grade = 1;
    Integer rest = n;
    for (Integer prime = 2; prime * prime <= rest;
         prime += (prime == 2 ? 1 : 2)) {
        while (rest % prime == 0) {
            rest /= prime;
            grade += prime - 1;
        }
    }
    if (rest > 1)
        grade += rest - 1;
    return grade;
}

inline Integer gradus(const Rational& r) {
    if (r <= 0)
        throw NonPositive("gradus: argument must be positive");
    return gradus(boost::multiprecision::numerator(r) *
                  boost::multiprecision::denominator(r));
}

// Gradus of the bichord {nu1, nu2}: the grade of the musical interval among
// them.  Both frequencies must be 5-limit multiples of the same reference.
inline Integer gradus_bichord(const Rational& nu1, const Rational& nu2) {
    if (nu1 <= 0 || nu2 <= 0)
        throw NonPositive("gradus_bichord: frequencies must be positive");
    try {
        point_from_ratio(nu1);
        point_from_ratio(nu2);
    } catch (const NotFiveLimit&) {
        throw NotJustTuned(
            "gradus_bichord: frequencies must be just-tuned (5-limit) "
            "ratios");
    }
    return gradus(nu2 / nu1);
}

// ---------------------------------------------------------------------------
// Empirical simplicity measure of a frequency ratio n/m:
// (1/gcd(n,m)) * (n+m)/(n*m), evaluated on the given representation.
// ---------------------------------------------------------------------------
inline Rational esm(const Integer& n, const Integer& m) {
    if (n <= 0 || m <= 0)
        throw NonPositive("esm: numerator and denominator must be positive");
    Integer g = boost::multiprecision::gcd(n, m);
    return Rational(n + m, n * m * g);
}

inline Rational esm(const Rational& r) {
    if (r <= 0)
        throw NonPositive("esm: ratio must be positive");
    return esm(boost::multiprecision::numerator(r),
               boost::multiprecision::denominator(r));
}

// ---------------------------------------------------------------------------
// The just-intonation scales.
// ---------------------------------------------------------------------------
struct JustScaleRow {
    std::string name;
    Rational ratio;
    EulerPoint point;
    Rational frequency;
    double cents;
};

inline const Rational& default_reference_frequency() {
    static const Rational ref{132};
    return ref;
}

// The seven-note just diatonic scale of C major.
inline std::vector<JustScaleRow> just_diatonic(
    const Rational& nu_ref = default_reference_frequency()) {
    static const std::array<std::pair<const char*, Rational>, 7> rows{{
        {"C", Rational(1)},
        {"D", Rational(9, 8)},
        {"E", Rational(5, 4)},
        {"F", Rational(4, 3)},
        {"G", Rational(3, 2)},
        {"A", Rational(5, 3)},
        {"B", Rational(15, 8)},
    }};
    std::vector<JustScaleRow> out;
    out.reserve(rows.size());
    for (const auto& [name, ratio] : rows)
        out.push_back({name, ratio, point_from_ratio(ratio), ratio * nu_ref,
                       pitch_of_point(point_from_ratio(ratio))});
    return out;
}

// Vogel's chromatic just-intonation scale of C major: the diatonic scale
// completed with the five simplest-ratio chromatic notes.
inline std::vector<JustScaleRow> vogel_chromatic(
    const Rational& nu_ref = default_reference_frequency()) {
    static const std::array<std::pair<const char*, Rational>, 12> rows{{
        {"C", Rational(1)},
        {"C#", Rational(16, 15)},
        {"D", Rational(9, 8)},
        {"D#", Rational(6, 5)},
        {"E", Rational(5, 4)},
        {"F", Rational(4, 3)},
        {"F#", Rational(45, 32)},
        {"G", Rational(3, 2)},
        {"G#", Rational(8, 5)},
        {"A", Rational(5, 3)},
        {"A#", Rational(16, 9)},
        {"B", Rational(15, 8)},
    }};
    std::vector<JustScaleRow> out;
    out.reserve(rows.size());
    for (const auto& [name, ratio] : rows)
        out.push_back({name, ratio, point_from_ratio(ratio), ratio * nu_ref,
                       pitch_of_point(point_from_ratio(ratio))});
    return out;
}

// Letter i of the just-intonation ansatz at the given comma cycle: the Vogel
// ratio shifted down one syntonic comma per cycle.
struct JustLetter {
    Rational ratio;
    EulerPoint point;
    double cents;
};

inline JustLetter just_letter(Letter i, int cycle) {
    if (cycle < 0)
        throw CycleUnderflow("just_letter: cycle must be non-negative");
    Rational ratio = vogel_chromatic()[static_cast<std::size_t>(
                         normalize_pc(i))].ratio *
                     rational_pow(Rational(80, 81), cycle);
    EulerPoint p = point_from_ratio(ratio);
    return {ratio, p, pitch_of_point(p)};
}

} // namespace harmonium
