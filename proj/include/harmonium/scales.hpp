#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace harmonium {

// ---------------------------------------------------------------------------
// Frequency-level constructions.  Everything derived from rational generators
// stays exact; tempered constructions carry exact dyadic exponents and only
// render to double at the end.
// ---------------------------------------------------------------------------

// The n-th harmonic of a note (n >= 1): the (n+1)-fold frequency.
template <class F>
F harmonic_of(const F& nu, int n) {
    if (n < 1)
        throw IndexOutOfRange("harmonic_of: harmonic index must be >= 1");
    return nu * (n + 1);
}

// A note owns the half-open octave [nu, 2 nu).
template <class F>
struct ScaleRange {
    F lo;
    F hi;
    bool contains(const F& x) const { return x >= lo && x < hi; }
};

template <class F>
ScaleRange<F> scale_range(const F& nu) {
    if (!(nu > 0))
        throw NonPositive("scale_range: frequency must be positive");
    return {nu, nu * 2};
}

// The unique power-of-two shift of mu landing in [nu, 2 nu).
inline Rational rescale_to_range(const Rational& nu, const Rational& mu) {
    if (nu <= 0 || mu <= 0)
        throw NonPositive("rescale_to_range: frequencies must be positive");
    Rational x = mu;
    while (x < nu)
        x *= 2;
    while (x >= nu * 2)
        x /= 2;
    return x;
}

inline double rescale_to_range(double nu, double mu) {
    if (!(nu > 0) || !(mu > 0))
        throw NonPositive("rescale_to_range: frequencies must be positive");
    double x = mu * std::exp2(std::ceil(std::log2(nu / mu)));
    // One corrective step guards against rounding at the octave boundary.
    while (x < nu)
        x *= 2;
    while (x >= 2 * nu)
        x /= 2;
    return x;
}

// Whether a/b is an integer power of c (c > 1).  Exact for rationals.
inline bool congruent_mod_powers(const Rational& a, const Rational& b,
                                 const Rational& c) {
    if (a <= 0 || b <= 0)
        throw NonPositive("congruent_mod_powers: frequencies must be "
                          "positive");
    if (c <= 1)
        throw NonPositive("congruent_mod_powers: base must exceed 1");
    Rational ratio = a >= b ? a / b : b / a;
    Rational power = 1;
    while (power < ratio)
        power *= c;
    return power == ratio;
}

inline bool congruent_mod_powers(double a, double b, double c) {
    if (!(a > 0) || !(b > 0))
        throw NonPositive("congruent_mod_powers: frequencies must be "
                          "positive");
    if (!(c > 1))
        throw NonPositive("congruent_mod_powers: base must exceed 1");
    double k = std::log(a / b) / std::log(c);
    double rounded = std::round(k);
    double reconstructed = std::pow(c, rounded);
    return std::abs(reconstructed - a / b) <=
           1e-12 * std::max(std::abs(a / b), reconstructed);
}

// Ascending stable sort of a note list.
template <class F>
std::vector<F> ordered(std::vector<F> seq) {
    std::stable_sort(seq.begin(), seq.end());
    return seq;
}

// ---------------------------------------------------------------------------
// Scales generated by a fixed interval: omega_0 = seed, omega_n the rescaled
// R-fold of its predecessor, stopping when the seed recurs (closed, the
// period is the step count) or at the step bound (open).
// ---------------------------------------------------------------------------
template <class F>
struct BasicGeneratedScale {
    std::vector<F> notes; // generation order, seed first
    bool closed = false;
    std::optional<int> period;
};

using GeneratedScale = BasicGeneratedScale<Rational>;
using RealGeneratedScale = BasicGeneratedScale<double>;

inline GeneratedScale scale_at_fixed_interval(const Rational& omega,
                                              const Rational& ratio,
                                              int max_steps) {
    if (omega <= 0 || ratio <= 0)
        throw NonPositive(
            "scale_at_fixed_interval: seed and ratio must be positive");
    GeneratedScale s;
    s.notes.push_back(omega);
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Integer on = numerator(omega), od = denominator(omega);
    const Integer p = numerator(ratio), q = denominator(ratio);
    const Integer two_on = on << 1;
    // cur = num/den, kept in lowest terms by hand: rational-number ops would
    // re-run full normalizing gcds each step, which turns the walk quadratic
    // once the parts grow to thousands of digits.  Multiplying a reduced
    // fraction by the reduced p/q can only introduce the factors gcd(p, den)
    // and gcd(q, num), and an octave shift only touches an even side.
    Integer num = on, den = od;
    // One Euclid step by hand keeps the library gcd on small operands; its
    // binary reduction degenerates badly when a huge value meets a tiny one.
    auto shared_factor = [](const Integer& big, const Integer& little) {
        return little == 1
                   ? Integer(1)
                   : boost::multiprecision::gcd(Integer(big % little), little);
    };
    auto is_even = [](const Integer& x) {
        return !boost::multiprecision::bit_test(x, 0);
    };
    for (int step = 1; step <= max_steps; ++step) {
        num *= p;
        if (Integer g = shared_factor(den, p); g > 1) {
            num /= g;
            den /= g;
        }
        den *= q;
        if (Integer g = shared_factor(num, q); g > 1) {
            num /= g;
            den /= g;
        }
        while (num * od < on * den) { // below the octave: double
            if (is_even(den))
                den >>= 1;
            else
                num <<= 1;
        }
        while (num * od >= two_on * den) { // at or past the octave: halve
            if (is_even(num))
                num >>= 1;
            else
                den <<= 1;
        }
        if (num == on && den == od) {
            s.closed = true;
            s.period = step;
            break;
        }
        s.notes.push_back(detail::rational_from_coprime(num, den));
    }
    return s;
}

inline RealGeneratedScale scale_at_fixed_interval(double omega, double ratio,
                                                  int max_steps) {
    if (!(omega > 0) || !(ratio > 0))
        throw NonPositive(
            "scale_at_fixed_interval: seed and ratio must be positive");
    RealGeneratedScale s;
    s.notes.push_back(omega);
    double cur = omega;
    for (int step = 1; step <= max_steps; ++step) {
        cur = rescale_to_range(omega, cur * ratio);
        if (std::abs(cur - omega) <= 1e-12 * omega) {
            s.closed = true;
            s.period = step;
            break;
        }
        s.notes.push_back(cur);
    }
    return s;
}

namespace detail {
inline Integer floor_rational(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}
} // namespace detail

// Generator ratio R = 2^exponent with an exact rational exponent: the octave
// offsets stay rational, so closure detection is exact even though the note
// frequencies are irrational.
inline RealGeneratedScale scale_at_power_of_two_interval(
    double omega, const Rational& exponent, int max_steps) {
    if (!(omega > 0))
        throw NonPositive(
            "scale_at_power_of_two_interval: seed must be positive");
    RealGeneratedScale s;
    s.notes.push_back(omega);
    Rational offset = 0; // log2(note/seed), kept in [0,1)
    for (int step = 1; step <= max_steps; ++step) {
        offset += exponent;
        offset -= detail::floor_rational(offset);
        if (offset == 0) {
            s.closed = true;
            s.period = step;
            break;
        }
        s.notes.push_back(omega * std::exp2(to_double(offset)));
    }
    return s;
}

// The natural cycle of fifths: count notes generated by R = 3.  Never closes.
inline GeneratedScale pythagorean_scale(const Rational& omega, int count) {
    if (count < 1)
        throw LengthTooShort("pythagorean_scale: need at least one note");
    return scale_at_fixed_interval(omega, Rational(3), count - 1);
}

// The N-equally-tempered scale: R = 2^(7/N).  Closes with period
// N / gcd(7, N).
inline RealGeneratedScale tempered_scale(double omega, int divisions) {
    if (divisions < 1)
        throw LengthTooShort("tempered_scale: need at least one division");
    return scale_at_power_of_two_interval(omega, Rational(7, divisions),
                                          divisions);
}

} // namespace harmonium
