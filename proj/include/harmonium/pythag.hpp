#pragma once

#include <compare>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "euler.hpp"
#include "modulation.hpp"
#include "pcset.hpp"
#include "rational.hpp"
#include "scales.hpp"
#include "tonality.hpp"

namespace harmonium {

// ---------------------------------------------------------------------------
// The Pythagorean alphabet: pitch classes tagged with a fifth-cycle index.
// Two letters with equal pitch class but different cycles differ by powers of
// the fifth comma and are distinct alphabet members.
// ---------------------------------------------------------------------------
struct PytLetter {
    Letter pc = 0;
    int cycle = 0;

    friend bool operator==(const PytLetter&, const PytLetter&) = default;
    // The fifth-cycles ordering: cycles dominate, pitch class breaks ties.
    friend std::strong_ordering operator<=>(const PytLetter& a,
                                            const PytLetter& b) {
        return std::tie(a.cycle, a.pc) <=> std::tie(b.cycle, b.pc);
    }
};

using PytWord = std::vector<PytLetter>;
using PytTonality = BasicTonality<PytLetter>;
using PytHarmonicWord = BasicHarmonicWord<PytLetter>;
using PytContext = BasicContext<PytLetter>;

// Every letter of a plain word tagged with the same cycle.
inline PytWord pyt_word(const Word& w, int cycle) {
    if (cycle < 0)
        throw CycleUnderflow("pyt_word: cycle must be non-negative");
    PytWord out;
    out.reserve(w.size());
    for (Letter pc : w)
        out.push_back({normalize_pc(pc), cycle});
    return out;
}

// ---------------------------------------------------------------------------
// Frequencies.  Two constructions are exposed: `chain` multiplies the cycle-0
// note by one fifth comma per cycle; `block` reads the sorted last twelve
// notes of the fifths spiral.  They agree through cycle 3 and split once the
// top of a block wraps past the octave.
// ---------------------------------------------------------------------------
enum class PytConstruction { chain, block };

// The sorted twelve-note block of the fifths spiral at the given cycle.
inline std::vector<Rational> pyt_block(
    int cycle, const Rational& nu_ref = default_reference_frequency()) {
    if (cycle < 0)
        throw CycleUnderflow("pyt_block: cycle must be non-negative");
    auto spiral = scale_at_fixed_interval(nu_ref, Rational(3),
                                          12 * cycle + 11);
    std::vector<Rational> block(spiral.notes.end() - 12, spiral.notes.end());
    return ordered(std::move(block));
}

inline Rational pyt_freq(const PytLetter& l,
                         PytConstruction construction = PytConstruction::chain,
                         const Rational& nu_ref =
                             default_reference_frequency()) {
    if (l.pc < 0 || l.pc >= kAlphabetSize)
        throw IndexOutOfRange("pyt_freq: pitch class must lie in 0..11");
    if (l.cycle < 0)
        throw CycleUnderflow("pyt_freq: cycle must be non-negative");
    if (construction == PytConstruction::block)
        return pyt_block(l.cycle, nu_ref)[static_cast<std::size_t>(l.pc)];
    return pyt_block(0, nu_ref)[static_cast<std::size_t>(l.pc)] *
           rational_pow(Rational(531441, 524288), l.cycle);
}

// All letters up to the given cycle in the fifth-cycles order.
inline std::vector<PytLetter> pyt_alphabet(int cycles) {
    if (cycles < 0)
        throw CycleUnderflow("pyt_alphabet: cycle bound must be "
                             "non-negative");
    std::vector<PytLetter> out;
    out.reserve(static_cast<std::size_t>(cycles + 1) * kAlphabetSize);
    for (int n = 0; n <= cycles; ++n)
        for (Letter pc = 0; pc < kAlphabetSize; ++pc)
            out.push_back({pc, n});
    return out;
}

// ---------------------------------------------------------------------------
// Transformations: translation and inversion act on pitch classes only;
// raising and lowering move a single letter across neighbouring cycles.
// ---------------------------------------------------------------------------
inline PytWord pyt_translated(const PytWord& w, int z) {
    PytWord out;
    out.reserve(w.size());
    for (const auto& l : w)
        out.push_back({normalize_pc(l.pc + z), l.cycle});
    return out;
}

inline PytWord pyt_inverted(const PytWord& w) {
    PytWord out;
    out.reserve(w.size());
    for (const auto& l : w)
        out.push_back({normalize_pc(-l.pc), l.cycle});
    return out;
}

inline PytWord cycle_raised(const PytWord& w, int i) {
    if (i < 1 || i > static_cast<int>(w.size()))
        throw IndexOutOfRange("cycle_raised: position " + std::to_string(i) +
                              " not in 1.." + std::to_string(w.size()));
    PytWord out = w;
    ++out[static_cast<std::size_t>(i - 1)].cycle;
    return out;
}

inline PytWord cycle_lowered(const PytWord& w, int i) {
    if (i < 1 || i > static_cast<int>(w.size()))
        throw IndexOutOfRange("cycle_lowered: position " + std::to_string(i) +
                              " not in 1.." + std::to_string(w.size()));
    if (w[static_cast<std::size_t>(i - 1)].cycle == 0)
        throw CycleUnderflow("cycle_lowered: letter " + std::to_string(i) +
                             " is already at cycle 0");
    PytWord out = w;
    --out[static_cast<std::size_t>(i - 1)].cycle;
    return out;
}

struct PytTranslate { int z; };
struct PytInvert {};
struct PytRaise { int i; };
struct PytLower { int i; };
using PytOp = std::variant<PytTranslate, PytInvert, PytRaise, PytLower>;

inline PytWord pyt_transform(const PytWord& w, const PytOp& op) {
    return std::visit(
        [&](const auto& o) -> PytWord {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, PytTranslate>)
                return pyt_translated(w, o.z);
            else if constexpr (std::is_same_v<T, PytInvert>)
                return pyt_inverted(w);
            else if constexpr (std::is_same_v<T, PytRaise>)
                return cycle_raised(w, o.i);
            else
                return cycle_lowered(w, o.i);
        },
        op);
}

// ---------------------------------------------------------------------------
// Tonal machinery over the Pythagorean alphabet: thin aliases over the
// letter-generic engine, with chord equality = exact (pc, cycle) equality.
// ---------------------------------------------------------------------------
inline PytTonality pyt_tonality(const PytWord& w, int level) {
    return make_tonality(w, level);
}

inline std::vector<PivotalDegree<PytLetter>> pyt_pivotal(
    const PytTonality& t1, const PytTonality& t2) {
    return pivotal_degrees(t1, t2);
}

inline PytContext pyt_natural_context(const PytWord& w, int level) {
    return detail::natural_context_impl(
        w, level, [](const PytWord& v, int z) { return pyt_translated(v, z); });
}

inline std::vector<Cadence<PytLetter>> pyt_cadences(
    const PytTonality& t, const PytContext& ctx, int maxlen,
    const CadenceOptions& opts = {}) {
    return cadences(t, ctx, maxlen, opts);
}

inline std::vector<BasicModulation<PytLetter>> pyt_modulations(
    const PytTonality& t1, const PytTonality& t2, const PytContext& ctx,
    int cadence_maxlen, const CadenceOptions& opts = {}) {
    return modulations_with_context(t1, t2, ctx, cadence_maxlen, opts);
}

// ---------------------------------------------------------------------------
// Comma displacement: words related by raise/lower compositions, i.e. equal
// pitch-class sequences with free cycles.
// ---------------------------------------------------------------------------
inline bool comma_equivalent(const PytWord& w1, const PytWord& w2) {
    if (w1.size() != w2.size())
        return false;
    for (std::size_t i = 0; i < w1.size(); ++i)
        if (w1[i].pc != w2[i].pc)
            return false;
    return true;
}

// Modulations between comma-displaced tonalities.  A displaced tonality is
// normally absent from the reference context, so the strict rule degenerates:
// any word touching a displaced chord has no container and passes vacuously.
// The declared rule is the meaningful reading here — the word must single out
// exactly one context member, and that member must be built over the same
// tonic as the displaced tonality.
inline CadenceOptions comma_cadence_options() {
    CadenceOptions opts;
    opts.rule = CadenceRule::declared;
    return opts;
}

inline std::vector<BasicModulation<PytLetter>> comma_modulations(
    const PytTonality& t1, const PytTonality& t2, const PytContext& ctx,
    int cadence_maxlen, const CadenceOptions& opts = comma_cadence_options()) {
    if (!comma_equivalent(t1.word, t2.word))
        return {};
    return modulations_with_context(t1, t2, ctx, cadence_maxlen, opts);
}

} // namespace harmonium
