#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace harmonium {

// ---------------------------------------------------------------------------
// Instrument spectra.  Amplitudes are stored as real numbers: the consonance
// index sums amplitudes literally, so signed values may cancel; the shipped
// instruments all use non-negative amplitudes.
// ---------------------------------------------------------------------------
struct Spectrum {
    std::map<int, double> coeffs; // harmonic index -> amplitude
    int n_max = 0;                // truncation bound of the model

    double at(int n) const {
        auto it = coeffs.find(n);
        return it == coeffs.end() ? 0.0 : it->second;
    }
};

// Single spectral line of amplitude a at index k.
inline Spectrum pure_oscillator(double a, int k) {
    if (k == 0)
        throw ZeroIndex("pure_oscillator: harmonic index must be nonzero");
    Spectrum s;
    s.coeffs[k] = a;
    s.n_max = std::abs(k);
    return s;
}

// The 1/n spectrum, extended symmetrically with a_0 = 0 so that the validity
// sum converges while equal-note consonance still grows without bound.
inline Spectrum ideal_spectrum(double a, int n_max) {
    if (n_max < 1)
        throw NonPositive("ideal_spectrum: truncation bound must be >= 1");
    Spectrum s;
    s.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        s.coeffs[n] = a / n;
        s.coeffs[-n] = a / n;
    }
    return s;
}

// The instrument-validity sum over the stored lines.
inline double spectral_energy(const Spectrum& s) {
    double total = 0;
    for (const auto& [n, a] : s.coeffs)
        total += a * s.at(-n);
    return total;
}

// A note: a pulsation together with the instrument playing it.
struct Sound {
    Rational pulsation;
    Spectrum spectrum;
};

struct RealSound {
    double pulsation;
    Spectrum spectrum;
};

// ---------------------------------------------------------------------------
// Commensurability: a vanishing nonzero integer combination of the
// pulsations.  Rational lists are always commensurable; real lists are
// decided by a bounded lattice search.
// ---------------------------------------------------------------------------
inline bool commensurable(const std::vector<Rational>& freqs,
                          const Rational& eps = 0) {
    if (freqs.size() < 2)
        throw EmptyList("commensurable: need at least two frequencies");
    for (const auto& f : freqs)
        if (f <= 0)
            throw NonPositive("commensurable: frequencies must be positive");
    (void)eps; // any two positive rationals already admit an exact relation
    return true;
}

inline bool commensurable(const std::vector<double>& freqs, double eps = 0,
                          int n_max = 16) {
    if (freqs.size() < 2)
        throw EmptyList("commensurable: need at least two frequencies");
    for (double f : freqs)
        if (!(f > 0))
            throw NonPositive("commensurable: frequencies must be positive");
    // Depth-first walk over the index lattice looking for |sum| <= eps.
    std::vector<int> n(freqs.size(), 0);
    bool found = false;
    auto walk = [&](auto&& self, std::size_t i, double sum,
                    bool nonzero) -> void {
        if (found)
            return;
        if (i == freqs.size()) {
            found = nonzero && std::abs(sum) <= eps;
            return;
        }
        for (int k = -n_max; k <= n_max; ++k)
            self(self, i + 1, sum + k * freqs[i], nonzero || k != 0);
    };
    walk(walk, 0, 0.0, false);
    return found;
}

// ---------------------------------------------------------------------------
// The physical consonance index: over all index vectors with |n_i| <= N_max,
// sum the amplitude totals of the vectors whose pulsation combination
// vanishes (to within eps).
// ---------------------------------------------------------------------------
namespace detail {

inline void check_lattice_budget(std::size_t count, int n_max,
                                 std::uint64_t budget) {
    std::uint64_t size = 1;
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(n_max) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        if (size > budget / side)
            throw BudgetExceeded(
                "consonance_index: lattice of " + std::to_string(count) +
                " sounds at bound " + std::to_string(n_max) +
                " exceeds the configured budget");
        size *= side;
    }
    if (size > budget)
        throw BudgetExceeded("consonance_index: lattice exceeds the "
                             "configured budget");
}

// One dense amplitude row per sound so the lattice walk avoids map lookups.
template <class SoundT>
std::vector<std::vector<double>> amplitude_rows(
    const std::vector<SoundT>& sounds, int n_max) {
    std::vector<std::vector<double>> rows;
    rows.reserve(sounds.size());
    for (const auto& s : sounds) {
        std::vector<double> row(2 * static_cast<std::size_t>(n_max) + 1);
        for (int k = -n_max; k <= n_max; ++k)
            row[static_cast<std::size_t>(k + n_max)] = s.spectrum.at(k);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

inline double consonance_index(const std::vector<Sound>& sounds, int n_max,
                               const Rational& eps = 0,
                               std::uint64_t budget = 10'000'000) {
    if (sounds.size() < 2)
        throw EmptyList("consonance_index: need at least two sounds");
    if (n_max < 0)
        throw NonPositive("consonance_index: lattice bound must be >= 0");
    if (eps < 0)
        throw NonPositive("consonance_index: tolerance must be >= 0");
    for (const auto& s : sounds)
        if (s.pulsation <= 0)
            throw NonPositive("consonance_index: pulsations must be "
                              "positive");
    detail::check_lattice_budget(sounds.size(), n_max, budget);

    // Scale the pulsations to integers so the inner loop needs no rational
    // reduction.
    Integer common_den = 1;
    for (const auto& s : sounds)
        common_den = boost::multiprecision::lcm(
            common_den, boost::multiprecision::denominator(s.pulsation));
    std::vector<Integer> scaled;
    scaled.reserve(sounds.size());
    for (const auto& s : sounds)
        scaled.push_back(boost::multiprecision::numerator(s.pulsation) *
                         (common_den /
                          boost::multiprecision::denominator(s.pulsation)));
    const Rational scaled_eps = eps * common_den;

    const auto rows = detail::amplitude_rows(sounds, n_max);
    double index = 0;
    auto walk = [&](auto&& self, std::size_t i, const Integer& sum,
                    double amplitude) -> void {
        if (i == sounds.size()) {
            if (scaled_eps == 0 ? sum == 0
                                : Rational(boost::multiprecision::abs(sum)) <=
                                      scaled_eps)
                index += amplitude;
            return;
        }
        for (int k = -n_max; k <= n_max; ++k)
            self(self, i + 1, sum + scaled[i] * k,
                 amplitude + rows[i][static_cast<std::size_t>(k + n_max)]);
    };
    walk(walk, 0, Integer(0), 0.0);
    return index;
}

inline double consonance_index(const std::vector<RealSound>& sounds,
                               int n_max, double eps,
                               std::uint64_t budget = 10'000'000) {
    if (sounds.size() < 2)
        throw EmptyList("consonance_index: need at least two sounds");
    if (n_max < 0)
        throw NonPositive("consonance_index: lattice bound must be >= 0");
    if (!(eps > 0))
        throw NonPositive("consonance_index: real pulsations require a "
                          "positive tolerance");
    for (const auto& s : sounds)
        if (!(s.pulsation > 0))
            throw NonPositive("consonance_index: pulsations must be "
                              "positive");
    detail::check_lattice_budget(sounds.size(), n_max, budget);

    const auto rows = detail::amplitude_rows(sounds, n_max);
    double index = 0;
    auto walk = [&](auto&& self, std::size_t i, double sum,
                    double amplitude) -> void {
        if (i == sounds.size()) {
            if (std::abs(sum) <= eps)
                index += amplitude;
            return;
        }
        for (int k = -n_max; k <= n_max; ++k)
            self(self, i + 1, sum + sounds[i].pulsation * k,
                 amplitude + rows[i][static_cast<std::size_t>(k + n_max)]);
    };
    walk(walk, 0, 0.0, 0.0);
    return index;
}

// The index plus a divergence verdict: the sum is reported divergent when
// doubling the lattice bound (from n_max/2 to n_max) still grows it.
struct ConsonanceReport {
    double index = 0;
    bool divergent = false;
};

inline ConsonanceReport consonance_report(const std::vector<Sound>& sounds,
                                          int n_max, const Rational& eps = 0,
                                          std::uint64_t budget = 10'000'000,
                                          double growth_threshold = 1e-9) {
    ConsonanceReport r;
    r.index = consonance_index(sounds, n_max, eps, budget);
    if (n_max >= 2) {
        double half = consonance_index(sounds, n_max / 2, eps, budget);
        r.divergent = r.index - half > growth_threshold;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Beats of two superposed lines with nearby pulsations: the slow envelope's
// instantaneous amplitude and phase at time t.
// ---------------------------------------------------------------------------
struct BeatPoint {
    double amplitude = 0;
    double phase = 0;
};

inline BeatPoint beat_envelope(double a1, double phi1, double a2, double phi2,
                               double delta_omega, double t) {
    const double shifted = phi2 + delta_omega * t;
    BeatPoint p;
    p.amplitude =
        std::sqrt(a1 * a1 + a2 * a2 +
                  2 * a1 * a2 * std::cos(phi1 - phi2 - delta_omega * t));
    p.phase = std::atan2(a1 * std::sin(phi1) + a2 * std::sin(shifted),
                         a1 * std::cos(phi1) + a2 * std::cos(shifted));
    return p;
}

// First-order combinational tones of the nonlinear regime.
inline std::pair<double, double> combinational_tones(double omega1,
                                                     double omega2) {
    if (!(omega1 > 0) || !(omega2 > 0))
        throw NonPositiveFrequency(
            "combinational_tones: pulsations must be positive");
    return {omega1 + omega2, std::abs(omega1 - omega2)};
}

} // namespace harmonium
