#include <catch2/catch_amalgamated.hpp>

#include <harmonium/consonance.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace harmonium;
using Catch::Matchers::WithinAbs;

namespace {

// Independent check: walk the full index lattice with an odometer and sum
// amplitude totals of the vanishing combinations.
double lattice_oracle(const std::vector<Sound>& sounds, int n_max,
                      const Rational& eps = 0) {
    std::vector<int> idx(sounds.size(), -n_max);
    double total = 0;
    while (true) {
        Rational combo = 0;
        double amp = 0;
        for (std::size_t i = 0; i < sounds.size(); ++i) {
            combo += Rational(idx[i]) * sounds[i].pulsation;
            amp += sounds[i].spectrum.at(idx[i]);
        }
        const Rational mag = combo < 0 ? Rational(-combo) : combo;
        if (mag <= eps)
            total += amp;
        std::size_t pos = idx.size();
        while (pos > 0) {
            if (idx[pos - 1] < n_max) {
                ++idx[pos - 1];
                break;
            }
            idx[pos - 1] = -n_max;
            --pos;
        }
        if (pos == 0)
            break;
    }
    return total;
}

Sound ideal_note(const Rational& pulsation, int n_max) {
    return {pulsation, ideal_spectrum(1.0, n_max)};
}

} // namespace

TEST_CASE("pure oscillators carry a single spectral line", "[consonance]") {
    const auto s = pure_oscillator(1.0, 1);
    CHECK(s.coeffs == std::map<int, double>{{1, 1.0}});
    CHECK(s.n_max == 1);
    CHECK(s.at(1) == 1.0);
    CHECK(s.at(2) == 0.0);
    CHECK(s.at(0) == 0.0);
    CHECK(s.at(-1) == 0.0);

    const auto down = pure_oscillator(0.5, -2);
    CHECK(down.coeffs == std::map<int, double>{{-2, 0.5}});
    CHECK(down.n_max == 2);

    CHECK_THROWS_AS(pure_oscillator(1.0, 0), ZeroIndex);
}

TEST_CASE("the ideal spectrum falls off as one over the index",
          "[consonance]") {
    const auto s = ideal_spectrum(1.0, 3);
    CHECK(s.n_max == 3);
    CHECK(s.at(0) == 0.0);
    for (int n = 1; n <= 3; ++n) {
        CHECK(s.at(n) == 1.0 / n);
        CHECK(s.at(-n) == 1.0 / n);
    }
    CHECK(s.at(4) == 0.0);

    // validity sum: 2 * (1 + 1/4 + 1/9)
    CHECK_THAT(spectral_energy(s), WithinAbs(49.0 / 18.0, 1e-12));
    // a lone line at +3 has nothing at -3 to pair with
    CHECK(spectral_energy(pure_oscillator(2.0, 3)) == 0.0);

    CHECK_THROWS_AS(ideal_spectrum(1.0, 0), NonPositive);
}

TEST_CASE("rational frequency lists are always commensurable",
          "[consonance]") {
    CHECK(commensurable(std::vector<Rational>{Rational(3, 2), Rational(1)}));
    CHECK(commensurable(
        std::vector<Rational>{Rational(1013, 7), Rational(17, 999)}));
    CHECK_THROWS_AS(commensurable(std::vector<Rational>{Rational(1)}),
                    EmptyList);
    CHECK_THROWS_AS(
        commensurable(std::vector<Rational>{Rational(1), Rational(-2)}),
        NonPositive);
}

TEST_CASE("real commensurability is a bounded lattice search",
          "[consonance]") {
    CHECK(commensurable(std::vector<double>{440.0, 440.0}));
    CHECK(commensurable(std::vector<double>{440.0, 660.0}));
    CHECK_FALSE(commensurable(std::vector<double>{std::sqrt(2.0), 1.0}));
    CHECK(commensurable(std::vector<double>{440.0, 440.0 * 1.0000001},
                        1e-3 * 440.0));
    CHECK_THROWS_AS(commensurable(std::vector<double>{440.0}), EmptyList);
    CHECK_THROWS_AS(commensurable(std::vector<double>{1.0, -2.0}),
                    NonPositive);
}

TEST_CASE("equal pure notes score twice their amplitude", "[consonance]") {
    const Sound note{Rational(440), pure_oscillator(1.0, 1)};
    CHECK(consonance_index({note, note}, 1) == 2.0);
    CHECK(consonance_index({note, note}, 8) == 2.0);
    CHECK(consonance_index({note, note}, 8) ==
          lattice_oracle({note, note}, 8));
}

TEST_CASE("an octave of pure oscillators scores a single amplitude",
          "[consonance]") {
    const Sound low{Rational(440), pure_oscillator(1.0, 1)};
    const Sound high{Rational(880), pure_oscillator(1.0, 1)};
    CHECK(consonance_index({low, high}, 2) == 1.0);
    CHECK(consonance_index({low, high}, 8) == 1.0);
    // the contributing vector needs an index of 2, out of reach at bound 1
    CHECK(consonance_index({low, high}, 1) == 0.0);
    CHECK(consonance_index({low, high}, 6) ==
          lattice_oracle({low, high}, 6));
}

TEST_CASE("out-of-reach rational ratios score zero", "[consonance]") {
    const Sound a{Rational(1), ideal_spectrum(1.0, 8)};
    const Sound b{Rational(1009, 1013), ideal_spectrum(1.0, 8)};
    CHECK(consonance_index({a, b}, 8) == 0.0);
    CHECK(lattice_oracle({a, b}, 8) == 0.0);

    const Sound pa{Rational(1), pure_oscillator(1.0, 1)};
    const Sound pb{Rational(17, 13), pure_oscillator(1.0, 1)};
    CHECK(consonance_index({pa, pb}, 8) == 0.0);
}

TEST_CASE("equal ideal notes grow with the lattice bound", "[consonance]") {
    double previous = 0;
    for (int bound : {10, 100, 1000}) {
        const auto note = ideal_note(Rational(1), bound);
        const double idx = consonance_index({note, note}, bound);
        // harmonic sum: each pair (k, -k) contributes 2/|k| twice
        double harmonic = 0;
        for (int k = 1; k <= bound; ++k)
            harmonic += 1.0 / k;
        CHECK_THAT(idx, WithinAbs(4.0 * harmonic, 1e-9));
        CHECK(idx > previous);
        previous = idx;
    }
}

TEST_CASE("the index agrees with the brute-force lattice oracle",
          "[consonance]") {
    const std::vector<Sound> fifth{ideal_note(Rational(2), 6),
                                   ideal_note(Rational(3), 6)};
    CHECK(consonance_index(fifth, 6) == lattice_oracle(fifth, 6));

    const std::vector<Sound> third{ideal_note(Rational(5, 4), 5),
                                   ideal_note(Rational(1), 5)};
    CHECK(consonance_index(third, 5) == lattice_oracle(third, 5));

    const std::vector<Sound> triad{ideal_note(Rational(4), 4),
                                   ideal_note(Rational(5), 4),
                                   ideal_note(Rational(6), 4)};
    CHECK(consonance_index(triad, 4) == lattice_oracle(triad, 4));

    // tolerance mode: a slightly detuned unison within a centiunit
    const std::vector<Sound> detuned{
        {Rational(1), pure_oscillator(1.0, 1)},
        {Rational(44001, 44000), pure_oscillator(1.0, 1)}};
    const Rational eps(1, 100);
    const double idx = consonance_index(detuned, 3, eps);
    CHECK(idx == lattice_oracle(detuned, 3, eps));
    CHECK(idx > 0.0);
    // ... and scores zero under the exact Kronecker delta
    CHECK(consonance_index(detuned, 3) == 0.0);
}

TEST_CASE("the index ignores sound order and pulsation rescaling",
          "[consonance]") {
    const std::vector<Sound> sounds{{Rational(3, 2), ideal_spectrum(1.0, 4)},
                                    {Rational(1), pure_oscillator(0.5, 2)},
                                    {Rational(5, 4), ideal_spectrum(0.25, 3)}};
    const double base = consonance_index(sounds, 4);
    const std::vector<Sound> permuted{sounds[2], sounds[0], sounds[1]};
    CHECK_THAT(consonance_index(permuted, 4), WithinAbs(base, 1e-12));

    std::vector<Sound> rescaled = sounds;
    for (auto& s : rescaled)
        s.pulsation *= Rational(53, 7);
    CHECK(consonance_index(rescaled, 4) == base);
}

TEST_CASE("the literature's reduced-fraction formula is not this index",
          "[consonance]") {
    // For the fifth 3:2 the folklore closed form gives (2+3)/(2*3) = 5/6.
    // The truncated lattice sum counts every multiple of the fundamental
    // relation: at bound 8 the vectors ±(3,-2) and ±(6,-4) contribute
    // 2*(1/3 + 1/2) + 2*(1/6 + 1/4) = 5/2.
    const std::vector<Sound> fifth{ideal_note(Rational(1), 8),
                                   ideal_note(Rational(3, 2), 8)};
    const double idx = consonance_index(fifth, 8);
    CHECK_THAT(idx, WithinAbs(2.5, 1e-12));
    CHECK(std::abs(idx - 5.0 / 6.0) > 1.0);
}

TEST_CASE("real pulsations demand a positive tolerance", "[consonance]") {
    const std::vector<RealSound> pair{{440.0, pure_oscillator(1.0, 1)},
                                      {440.0, pure_oscillator(1.0, 1)}};
    CHECK(consonance_index(pair, 2, 1e-9) == 2.0);
    CHECK_THROWS_AS(consonance_index(pair, 2, 0.0), NonPositive);

    const std::vector<RealSound> diagonal{{1.0, ideal_spectrum(1.0, 8)},
                                          {std::sqrt(2.0),
                                           ideal_spectrum(1.0, 8)}};
    CHECK(consonance_index(diagonal, 8, 1e-9) == 0.0);
}

TEST_CASE("the report flags harmonically divergent pairs", "[consonance]") {
    const auto unison = ideal_note(Rational(1), 100);
    const auto growing = consonance_report({unison, unison}, 100);
    CHECK(growing.divergent);
    CHECK(growing.index == consonance_index({unison, unison}, 100));

    const Sound flat{Rational(1), pure_oscillator(1.0, 1)};
    const auto steady = consonance_report({flat, flat}, 100);
    CHECK_FALSE(steady.divergent);
    CHECK(steady.index == 2.0);

    const auto silent = consonance_report(
        {ideal_note(Rational(1), 8), ideal_note(Rational(1009, 1013), 8)}, 8);
    CHECK_FALSE(silent.divergent);
    CHECK(silent.index == 0.0);
}

TEST_CASE("index preconditions and budget", "[consonance]") {
    const Sound note{Rational(1), pure_oscillator(1.0, 1)};
    CHECK_THROWS_AS(consonance_index({note}, 2), EmptyList);
    CHECK_THROWS_AS(consonance_index({note, note}, -1), NonPositive);
    CHECK_THROWS_AS(consonance_index({note, note}, 2, Rational(-1)),
                    NonPositive);
    CHECK_THROWS_AS(
        consonance_index({Sound{Rational(0), pure_oscillator(1.0, 1)}, note},
                         2),
        NonPositive);
    CHECK_THROWS_AS(consonance_index({note, note}, 5, Rational(0), 100),
                    BudgetExceeded);
    CHECK_THROWS_AS(consonance_index({note, note}, 5000), BudgetExceeded);
    // bound zero admits only the all-zero vector, whose amplitude total is 0
    CHECK(consonance_index({note, note}, 0) == 0.0);
}

TEST_CASE("beat envelopes follow the two-line interference law",
          "[consonance]") {
    const auto constructive = beat_envelope(1.0, 0.3, 1.0, 0.3, 0.0, 5.0);
    CHECK_THAT(constructive.amplitude, WithinAbs(2.0, 1e-12));

    const auto destructive =
        beat_envelope(1.0, std::acos(-1.0), 1.0, 0.0, 0.0, 1.0);
    CHECK_THAT(destructive.amplitude, WithinAbs(0.0, 1e-7));

    const double cases[][6] = {
        {1.0, 0.2, 0.7, -1.1, 3.0, 0.25},
        {0.3, 2.9, 1.8, 0.4, -5.0, 1.75},
        {2.0, -0.8, 2.0, 0.8, 0.1, 12.0},
    };
    for (const auto& c : cases) {
        const auto p = beat_envelope(c[0], c[1], c[2], c[3], c[4], c[5]);
        const std::complex<double> z =
            c[0] * std::polar(1.0, c[1]) +
            c[2] * std::polar(1.0, c[3] + c[4] * c[5]);
        CHECK_THAT(p.amplitude, WithinAbs(std::abs(z), 1e-12));
        CHECK_THAT(p.phase, WithinAbs(std::arg(z), 1e-12));
    }
}

TEST_CASE("combinational tones are the sum and difference pulsations",
          "[consonance]") {
    CHECK(combinational_tones(440.0, 550.0) ==
          std::pair<double, double>{990.0, 110.0});
    CHECK(combinational_tones(550.0, 440.0) ==
          std::pair<double, double>{990.0, 110.0});
    CHECK(combinational_tones(440.0, 440.0) ==
          std::pair<double, double>{880.0, 0.0});
    CHECK_THROWS_AS(combinational_tones(0.0, 440.0), NonPositiveFrequency);
    CHECK_THROWS_AS(combinational_tones(440.0, -1.0), NonPositiveFrequency);
}
