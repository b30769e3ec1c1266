#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "pcset.hpp"
#include "tonality.hpp"

namespace harmonium {

// ---------------------------------------------------------------------------
// A modulation is a pivot chord (neutral ground shared by both tonalities)
// followed by a cadence that declares the target.
// ---------------------------------------------------------------------------
template <class L>
struct BasicModulation {
    PivotalDegree<L> pivot;
    Cadence<L> cadence;
};

using Modulation = BasicModulation<Letter>;

template <class L>
std::vector<BasicModulation<L>> modulations_with_context(
    const BasicTonality<L>& t1, const BasicTonality<L>& t2,
    const BasicContext<L>& target_ctx, int cadence_maxlen,
    const CadenceOptions& opts = {}) {
    std::vector<BasicModulation<L>> out;
    auto pivots = pivotal_degrees(t1, t2);
    if (pivots.empty())
        return out;
    auto cds = cadences(t2, target_ctx, cadence_maxlen, opts);
    out.reserve(pivots.size() * cds.size());
    for (const auto& p : pivots)      // ordered by degree in t1
        for (const auto& c : cds)     // then cadence enumeration order
            out.push_back({p, c});
    return out;
}

// Default target context is the natural context of t2.
inline std::vector<Modulation> modulations(const Tonality& t1,
                                           const Tonality& t2,
                                           int cadence_maxlen,
                                           const CadenceOptions& opts = {}) {
    return modulations_with_context(
        t1, t2, natural_context(t2.word, t2.level), cadence_maxlen, opts);
}

// ---------------------------------------------------------------------------
// Mazzola modulator: the unique translation carrying word1 to word2,
// composed with the inversion when word1 is pointwise inversion-invariant.
// ---------------------------------------------------------------------------
inline std::optional<TIMap> mazzola_modulator(const Tonality& t1,
                                              const Tonality& t2) {
    if (!equivalent(t1.word, t2.word, Equivalence::translational))
        return std::nullopt;
    Letter z = normalize_pc(t2.word.front() - t1.word.front());
    bool inv = inverted(t1.word) == t1.word;
    return inv ? TIMap{true, z} : TIMap{false, z};
}

struct MazzolaModulation {
    TIMap modulator;
    Cadence<Letter> cadence;
};

inline std::vector<MazzolaModulation> mazzola_modulations(
    const Tonality& t1, const Tonality& t2, int cadence_maxlen,
    const CadenceOptions& opts = {}) {
    std::vector<MazzolaModulation> out;
    auto g = mazzola_modulator(t1, t2);
    if (!g)
        return out;
    for (const auto& c :
         cadences(t2, natural_context(t2.word, t2.level), cadence_maxlen,
                  opts))
        out.push_back({*g, c});
    return out;
}

// ---------------------------------------------------------------------------
// Tonal musical pieces: harmonic words hw_1..hw_k over tonalities t_1..t_k
// linked by modulations m_1..m_{k-1}.
// ---------------------------------------------------------------------------
template <class L>
struct BasicPiece {
    std::vector<BasicTonality<L>> tonalities;
    std::vector<BasicHarmonicWord<L>> harmonic_words;
    std::vector<BasicModulation<L>> modulations;
};

using Piece = BasicPiece<Letter>;

enum class PieceKind { general, mazzola };

struct PieceReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

inline PieceReport validate_piece(const Piece& p,
                                  PieceKind kind = PieceKind::general,
                                  const CadenceOptions& opts = {}) {
    if (p.tonalities.empty() ||
        p.harmonic_words.size() != p.tonalities.size() ||
        p.modulations.size() + 1 != p.tonalities.size())
        throw MalformedPiece(
            "validate_piece: need k tonalities, k harmonic words and k-1 "
            "modulations");
    PieceReport report;
    auto flag = [&](std::size_t i, const std::string& what) {
        report.violations.push_back("segment " + std::to_string(i + 1) + ": " +
                                    what);
    };
    for (std::size_t i = 0; i < p.tonalities.size(); ++i)
        if (!contains(p.tonalities[i], p.harmonic_words[i]))
            flag(i, "harmonic word uses a chord foreign to its tonality");
    for (std::size_t i = 0; i < p.modulations.size(); ++i) {
        const auto& m = p.modulations[i];
        const auto& src = p.tonalities[i];
        const auto& dst = p.tonalities[i + 1];
        bool pivot_ok = false;
        for (const auto& piv : pivotal_degrees(src, dst))
            if (piv.chord == m.pivot.chord &&
                piv.degree_in_first == m.pivot.degree_in_first &&
                piv.degree_in_second == m.pivot.degree_in_second) {
                pivot_ok = true;
                break;
            }
        if (!pivot_ok)
            flag(i, "pivot chord is not a pivotal degree of the tonality "
                    "pair");
        if (!is_cadence(m.cadence.chords, dst,
                        natural_context(dst.word, dst.level), opts.rule))
            flag(i, "modulation cadence does not declare the target "
                    "tonality");
        if (kind == PieceKind::mazzola &&
            !mazzola_modulator(src, dst))
            flag(i, "no Mazzola modulator exists for the tonality pair");
    }
    return report;
}

// ---------------------------------------------------------------------------
// The II-V-I walk around the fifths cycle: concatenated progressions over
// roots 0, 7, 2, ... (steps+1 roots).
// ---------------------------------------------------------------------------
inline std::vector<Word> fifths_cycle_piece(int level, int steps,
                                            const std::vector<int>& degrees =
                                                {2, 5, 1}) {
    Word major = named_word("major");
    if (level < 1 || level > maxlevel(major))
        throw LevelOutOfRange("fifths_cycle_piece: level " +
                              std::to_string(level) + " not in 1.." +
                              std::to_string(maxlevel(major)));
    std::vector<Word> out;
    int root = 0;
    for (int s = 0; s <= steps; ++s, root = normalize_pc(root + 7)) {
        auto t = make_tonality(translated(major, root), level);
        for (const auto& c : hw_from_degrees(t, degrees))
            out.push_back(c);
    }
    return out;
}

} // namespace harmonium
