#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace harmonium {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// r^e for integer e (negative exponents allowed for nonzero r).
inline Rational rational_pow(const Rational& r, long long e) {
    if (e == 0)
        return Rational(1);
    if (e < 0) {
        if (r == 0)
            throw NonPositive("rational_pow: zero base with negative exponent");
        return Rational(1) / rational_pow(r, -e);
    }
    Rational acc(1), base(r);
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

namespace detail {

// Assemble a rational whose parts are already in lowest terms.  The public
// two-argument constructor always runs a normalizing gcd pass, which
// dominates everything else once the parts reach thousands of digits; the
// caller vouches for coprimality and a positive denominator.
inline Rational rational_from_coprime(const Integer& num, const Integer& den) {
    Rational r(num);
    const_cast<Integer&>(r.backend().data().denominator()) = den;
    return r;
}

// Base-10 only: the bignum string constructor would read a leading zero as
// an octal prefix, turning "025" into 21.
inline Integer decimal_integer(std::string s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.erase(0, 1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
    Integer v(s);
    return neg ? -v : v;
}

} // namespace detail

// Parse "123", "-7", "3/2" or a terminating decimal like "140.958984375"
// into an exact rational.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { return Error("not a rational literal: '" + text + "'"); };
    if (text.empty())
        throw bad();
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            Integer num = detail::decimal_integer(text.substr(0, slash));
            Integer den = detail::decimal_integer(text.substr(slash + 1));
            if (den == 0)
                throw bad();
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos)
            return Rational(detail::decimal_integer(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        if (frac == 0)
            return Rational(detail::decimal_integer(digits));
        Integer den(1);
        for (std::size_t i = 0; i < frac; ++i)
            den *= 10;
        return Rational(detail::decimal_integer(digits), den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

// Decimal rendering with the given number of fractional digits
// (exact when the denominator is a product of 2s and 5s and digits suffice).
inline std::string to_decimal_string(const Rational& r, unsigned digits) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg)
        num = -num;
    Integer scale(1);
    for (unsigned i = 0; i < digits; ++i)
        scale *= 10;
    Integer whole = num / den;
    Integer rem   = num % den;
    Integer frac  = (rem * scale * 2 + den) / (2 * den); // round half up
    if (frac >= scale) {                                  // carry from rounding
        whole += 1;
        frac -= scale;
    }
    std::string out = (neg ? "-" : "") + whole.str();
    if (digits) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

} // namespace harmonium
