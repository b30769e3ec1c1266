#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <vector>

#include <harmonium/scales.hpp>

using namespace harmonium;

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("harmonics multiply the fundamental", "[scales]") {
    CHECK(harmonic_of(Rational(132), 1) == Rational(264));
    CHECK(harmonic_of(Rational(132), 2) == Rational(396));
    CHECK(harmonic_of(110.0, 3) == 440.0);
    CHECK_THROWS_AS(harmonic_of(Rational(132), 0), IndexOutOfRange);
    CHECK_THROWS_AS(harmonic_of(132.0, -1), IndexOutOfRange);
}

TEST_CASE("a note owns the half-open octave above it", "[scales]") {
    const auto range = scale_range(Rational(132));
    CHECK(range.lo == Rational(132));
    CHECK(range.hi == Rational(264));
    CHECK(range.contains(Rational(132)));
    CHECK(range.contains(Rational(263)));
    CHECK_FALSE(range.contains(Rational(264)));
    CHECK_FALSE(range.contains(Rational(131)));
    CHECK_THROWS_AS(scale_range(Rational(0)), NonPositive);
    CHECK_THROWS_AS(scale_range(-4.0), NonPositive);
}

TEST_CASE("rescaling shifts by the unique power of two", "[scales]") {
    const Rational nu(132);
    CHECK(rescale_to_range(nu, Rational(33)) == Rational(132));
    CHECK(rescale_to_range(nu, Rational(396)) == Rational(198));
    CHECK(rescale_to_range(nu, Rational(264)) == Rational(132));
    CHECK(rescale_to_range(nu, Rational(150)) == Rational(150));
    CHECK(rescale_to_range(nu, Rational(1, 1000)) ==
          Rational(1, 1000) * rational_pow(Rational(2), 18));
    CHECK_THROWS_AS(rescale_to_range(nu, Rational(0)), NonPositive);
    CHECK_THROWS_AS(rescale_to_range(Rational(-1), Rational(3)), NonPositive);

    for (int k = 1; k <= 40; ++k) {
        const Rational mu = Rational(7, 3) * rational_pow(Rational(3, 2), k);
        const Rational x = rescale_to_range(nu, mu);
        REQUIRE(x >= nu);
        REQUIRE(x < nu * 2);
        REQUIRE(congruent_mod_powers(x, mu, Rational(2)));
    }
}

TEST_CASE("real rescaling agrees with the exact one", "[scales]") {
    CHECK_THAT(rescale_to_range(132.0, 396.0), WithinRel(198.0, 1e-12));
    CHECK_THAT(rescale_to_range(132.0, 132.0), WithinRel(132.0, 1e-12));
    // boundary: exactly one octave up folds back onto the seed
    CHECK_THAT(rescale_to_range(132.0, 264.0), WithinRel(132.0, 1e-12));
    for (double mu : {1e-6, 0.37, 131.99, 263.99, 264.01, 9.4e11}) {
        const double x = rescale_to_range(132.0, mu);
        REQUIRE(x >= 132.0);
        REQUIRE(x < 264.0);
        const double k = std::log2(x / mu);
        REQUIRE_THAT(k, WithinAbs(std::round(k), 1e-9));
    }
    CHECK_THROWS_AS(rescale_to_range(132.0, 0.0), NonPositive);
}

TEST_CASE("congruence modulo powers", "[scales]") {
    CHECK(congruent_mod_powers(Rational(132), Rational(33), Rational(2)));
    CHECK(congruent_mod_powers(Rational(33), Rational(132), Rational(2)));
    CHECK(congruent_mod_powers(Rational(132), Rational(132), Rational(2)));
    CHECK_FALSE(congruent_mod_powers(Rational(132), Rational(44),
                                     Rational(2)));
    CHECK(congruent_mod_powers(Rational(1), Rational(27), Rational(3)));
    CHECK(congruent_mod_powers(Rational(3, 2), Rational(3), Rational(2)));
    CHECK_FALSE(congruent_mod_powers(Rational(9, 8), Rational(3), Rational(2)));
    CHECK_THROWS_AS(congruent_mod_powers(Rational(0), Rational(1),
                                         Rational(2)),
                    NonPositive);
    CHECK_THROWS_AS(congruent_mod_powers(Rational(1), Rational(1),
                                         Rational(1)),
                    NonPositive);

    CHECK(congruent_mod_powers(132.0, 33.0, 2.0));
    CHECK(congruent_mod_powers(132.0, 132.0, 2.0));
    CHECK_FALSE(congruent_mod_powers(132.0, 44.0, 2.0));
    CHECK_THROWS_AS(congruent_mod_powers(1.0, 1.0, 0.5), NonPositive);
}

TEST_CASE("ordered sorts notes ascending", "[scales]") {
    CHECK(ordered(std::vector<Rational>{Rational(3), Rational(1),
                                        Rational(2)}) ==
          std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    CHECK(ordered(std::vector<double>{2.5, 1.5}) ==
          std::vector<double>{1.5, 2.5});
    CHECK(ordered(std::vector<double>{}).empty());
}

TEST_CASE("fifth-generated scales walk the octave exactly", "[scales]") {
    const auto s = scale_at_fixed_interval(Rational(132), Rational(3), 4);
    REQUIRE(s.notes.size() == 5);
    CHECK(s.notes[0] == Rational(132));
    CHECK(s.notes[1] == Rational(198));
    CHECK(s.notes[2] == Rational(297, 2));
    CHECK(s.notes[3] == Rational(891, 4));
    CHECK(s.notes[4] == Rational(2673, 16));
    CHECK_FALSE(s.closed);
    CHECK_FALSE(s.period.has_value());
    for (const auto& x : s.notes) {
        CHECK(x >= Rational(132));
        CHECK(x < Rational(264));
    }
    CHECK_THROWS_AS(scale_at_fixed_interval(Rational(0), Rational(3), 4),
                    NonPositive);
    CHECK_THROWS_AS(scale_at_fixed_interval(Rational(132), Rational(-3), 4),
                    NonPositive);
}

TEST_CASE("rational generators close only on powers of two", "[scales]") {
    for (const Rational& r : {Rational(2), Rational(8), Rational(1, 2),
                              Rational(1)}) {
        const auto s = scale_at_fixed_interval(Rational(132), r, 10);
        INFO(r.str());
        CHECK(s.closed);
        CHECK(s.period == 1);
        CHECK(s.notes.size() == 1);
    }
    for (const Rational& r : {Rational(3), Rational(3, 2), Rational(4, 3),
                              Rational(5, 4), Rational(9, 8)}) {
        const auto s = scale_at_fixed_interval(Rational(132), r, 200);
        INFO(r.str());
        CHECK_FALSE(s.closed);
        CHECK(s.notes.size() == 201);
    }
}

TEST_CASE("real-seed scales tolerate rounding at closure", "[scales]") {
    const auto s = scale_at_fixed_interval(132.0, 2.0, 10);
    CHECK(s.closed);
    CHECK(s.period == 1);
    const auto open = scale_at_fixed_interval(132.0, 3.0, 30);
    CHECK_FALSE(open.closed);
    REQUIRE(open.notes.size() == 31);
    CHECK_THAT(open.notes[1], WithinRel(198.0, 1e-12));
}

TEST_CASE("dyadic-exponent generators detect closure exactly", "[scales]") {
    const auto s = scale_at_power_of_two_interval(132.0, Rational(7, 12), 100);
    CHECK(s.closed);
    CHECK(s.period == 12);
    REQUIRE(s.notes.size() == 12);
    const auto sorted = ordered(s.notes);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        CHECK_THAT(sorted[i + 1] / sorted[i],
                   WithinRel(std::exp2(1.0 / 12.0), 1e-12));

    const auto unit = scale_at_power_of_two_interval(132.0, Rational(1), 10);
    CHECK(unit.closed);
    CHECK(unit.period == 1);

    // an irrational generator that is no power of two never closes; here the
    // exponent grid guarantees closure at the denominator
    const auto s5 = scale_at_power_of_two_interval(132.0, Rational(3, 5), 100);
    CHECK(s5.closed);
    CHECK(s5.period == 5);
    CHECK_THROWS_AS(scale_at_power_of_two_interval(0.0, Rational(1, 2), 5),
                    NonPositive);
}

TEST_CASE("the natural cycle of fifths stays open", "[scales]") {
    const auto s = pythagorean_scale(Rational(132), 12);
    CHECK_FALSE(s.closed);
    REQUIRE(s.notes.size() == 12);
    CHECK(s.notes.front() == Rational(132));
    CHECK(s.notes[1] == Rational(198));
    CHECK(pythagorean_scale(Rational(132), 1).notes ==
          std::vector<Rational>{Rational(132)});
    CHECK_THROWS_AS(pythagorean_scale(Rational(132), 0), LengthTooShort);
}

TEST_CASE("equal temperaments close with period N/gcd(7,N)", "[scales]") {
    for (int n : {5, 7, 12, 14, 19, 21, 24, 31}) {
        const auto s = tempered_scale(132.0, n);
        INFO(n << " divisions");
        CHECK(s.closed);
        CHECK(s.period == n / std::gcd(7, n));
        CHECK(s.notes.size() == static_cast<std::size_t>(n / std::gcd(7, n)));
    }
    const auto twelve = tempered_scale(132.0, 12);
    CHECK_THAT(twelve.notes[1], WithinRel(132.0 * std::exp2(7.0 / 12.0),
                                          1e-12));
    CHECK_THROWS_AS(tempered_scale(132.0, 0), LengthTooShort);
}
