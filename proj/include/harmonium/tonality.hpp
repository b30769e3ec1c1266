#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "pcset.hpp"

namespace harmonium {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// ---------------------------------------------------------------------------
// A tonality is a nonrepetitive word plus a chord level; it induces one chord
// per degree.  The engine is generic in the letter type: the plain Z12
// alphabet and the fifth-cycle-tagged alphabet share all search code.
// ---------------------------------------------------------------------------
template <class L>
struct BasicTonality {
    std::vector<L> word;
    int level = 1;
    std::vector<std::vector<L>> degree_chords;

    // Identity is (word, level); equal degree tables do not merge tonalities.
    friend bool operator==(const BasicTonality& a, const BasicTonality& b) {
        return a.level == b.level && a.word == b.word;
    }
};

using Tonality = BasicTonality<Letter>;

template <class L>
using BasicHarmonicWord = std::vector<std::vector<L>>; // sequence of chords

using HarmonicWord = BasicHarmonicWord<Letter>;

template <class L>
using BasicContext = std::vector<BasicTonality<L>>;

using Context = BasicContext<Letter>;

template <class L>
BasicTonality<L> make_tonality(const std::vector<L>& w, int level) {
    BasicTonality<L> t;
    t.word = w;
    t.level = level;
    t.degree_chords.reserve(w.size());
    for (int i = 1; i <= static_cast<int>(w.size()); ++i)
        t.degree_chords.push_back(chord(w, i, level));
    return t;
}

// ---------------------------------------------------------------------------
// Harmonic words
// ---------------------------------------------------------------------------

// All degree sequences of exact length n (or of every length 1..n when upto),
// lexicographic by 1-based degree index within each length.
inline std::vector<std::vector<int>> degree_sequences(int degree_count, int n,
                                                      bool upto) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int d = 1; d <= degree_count; ++d) {
            cur.push_back(d);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    for (int len = upto ? 1 : n; len <= n; ++len)
        rec(rec, len);
    return out;
}

template <class L>
BasicHarmonicWord<L> hw_from_degrees(const BasicTonality<L>& t,
                                     const std::vector<int>& degrees) {
    BasicHarmonicWord<L> hw;
    hw.reserve(degrees.size());
    for (int d : degrees) {
        if (d < 1 || static_cast<std::size_t>(d) > t.degree_chords.size())
            throw DegreeOutOfRange("hw_from_degrees: degree " +
                                   std::to_string(d) + " not in 1.." +
                                   std::to_string(t.degree_chords.size()));
        hw.push_back(t.degree_chords[d - 1]);
    }
    return hw;
}

template <class L>
std::vector<BasicHarmonicWord<L>> harmonic_words(const BasicTonality<L>& t,
                                                 int n, bool upto = false) {
    std::vector<BasicHarmonicWord<L>> out;
    for (const auto& degrees :
         degree_sequences(static_cast<int>(t.word.size()), n, upto))
        out.push_back(hw_from_degrees(t, degrees));
    return out;
}

// True iff every chord of hw equals (ordered tuple equality) some degree
// chord of t.
template <class L>
bool contains(const BasicTonality<L>& t, const BasicHarmonicWord<L>& hw) {
    for (const auto& c : hw) {
        bool found = false;
        for (const auto& dc : t.degree_chords)
            if (dc == c) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

// 1-based index of the first degree chord equal to c.
template <class L>
int degree_of(const BasicTonality<L>& t, const std::vector<L>& c) {
    for (std::size_t i = 0; i < t.degree_chords.size(); ++i)
        if (t.degree_chords[i] == c)
            return static_cast<int>(i) + 1;
    throw NotADegree("degree_of: chord is not a degree of the tonality");
}

// ---------------------------------------------------------------------------
// Pivotal degrees
// ---------------------------------------------------------------------------
template <class L>
struct PivotalDegree {
    std::vector<L> chord;
    int degree_in_first  = 0;
    int degree_in_second = 0;
};

// Exact-tuple intersection of the two degree-chord ranges, ordered by the
// degree in the first tonality.
template <class L>
std::vector<PivotalDegree<L>> pivotal_degrees(const BasicTonality<L>& t1,
                                              const BasicTonality<L>& t2) {
    std::vector<PivotalDegree<L>> out;
    for (std::size_t i = 0; i < t1.degree_chords.size(); ++i) {
        const auto& c = t1.degree_chords[i];
        for (std::size_t j = 0; j < t2.degree_chords.size(); ++j)
            if (t2.degree_chords[j] == c) {
                out.push_back({c, static_cast<int>(i) + 1,
                               static_cast<int>(j) + 1});
                break; // first occurrence in t2
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cadences
// ---------------------------------------------------------------------------

// Two readings of "declares its tonality".  strict: the probed tonality
// itself must be the only container among ctx ∪ {t} (so when t is outside
// the context, no context member may contain the word).  declared: exactly
// one context member contains the word, and that member shares t's first
// degree chord — the convention under which a displaced (out-of-context)
// tonality can still cadence onto a context member, but only when the word
// points at a tonality built over the same tonic.  For a tonality drawn
// from the context itself the two readings agree: the unique container can
// only be t.
enum class CadenceRule { strict, declared };

template <class L>
bool is_cadence(const BasicHarmonicWord<L>& hw, const BasicTonality<L>& t,
                const BasicContext<L>& ctx,
                CadenceRule rule = CadenceRule::strict) {
    if (hw.empty())
        return false;
    if (!contains(t, hw))
        return false;
    if (rule == CadenceRule::strict) {
        for (const auto& u : ctx)
            if (contains(u, hw) && !(u == t))
                return false;
        return true;
    }
    const BasicTonality<L>* holder = nullptr;
    for (const auto& u : ctx) {
        if (!contains(u, hw))
            continue;
        if (holder != nullptr)
            return false;
        holder = &u;
    }
    return holder != nullptr &&
           holder->degree_chords.front() == t.degree_chords.front();
}

struct CadenceOptions {
    bool minimal = false;
    CadenceRule rule = CadenceRule::strict;
    std::uint64_t budget = kDefaultSearchBudget;
};

template <class L>
struct Cadence {
    std::vector<int> degrees; // 1-based, the display form
    BasicHarmonicWord<L> chords;
};

namespace detail {

inline std::uint64_t candidate_count(std::uint64_t base, int n, bool upto) {
    std::uint64_t total = 0, power = 1;
    for (int k = 1; k <= n; ++k) {
        if (power > UINT64_MAX / base)
            return UINT64_MAX;
        power *= base;
        if (upto) {
            if (total > UINT64_MAX - power)
                return UINT64_MAX;
            total += power;
        } else {
            total = power;
        }
    }
    return total;
}

} // namespace detail

// All cadences among harmonic words of length <= maxlen (exactly maxlen when
// minimal); ordering by length, then lexicographic by degree indices.
template <class L>
std::vector<Cadence<L>> cadences(const BasicTonality<L>& t,
                                 const BasicContext<L>& ctx, int maxlen,
                                 const CadenceOptions& opts = {}) {
    if (maxlen < 1)
        throw LengthTooShort("cadences: maxlen must be >= 1");
    const auto degree_count = static_cast<int>(t.word.size());
    if (detail::candidate_count(static_cast<std::uint64_t>(degree_count),
                                maxlen, !opts.minimal) > opts.budget)
        throw SearchBudgetExceeded("cadences: candidate count exceeds budget");

    auto cadential = [&](const std::vector<int>& degrees) {
        return is_cadence(hw_from_degrees(t, degrees), t, ctx, opts.rule);
    };

    std::vector<Cadence<L>> out;
    std::vector<int> cur;
    auto walk = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (!cadential(cur))
                return;
            if (opts.minimal) {
                for (std::size_t k = 1; k < cur.size(); ++k)
                    if (cadential(std::vector<int>(cur.begin(),
                                                   cur.begin() + k)))
                        return;
            }
            out.push_back({cur, hw_from_degrees(t, cur)});
            return;
        }
        for (int d = 1; d <= degree_count; ++d) {
            cur.push_back(d);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    for (int len = opts.minimal ? maxlen : 1; len <= maxlen; ++len)
        walk(walk, len);
    return out;
}

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

namespace detail {

// Build the tonalities of all translates, dropping any whose degree table
// coincides as a chord set with one already kept (translation-invariant
// letter sets would otherwise contribute rotated duplicates).
template <class L, class TranslateFn>
BasicContext<L> natural_context_impl(const std::vector<L>& w, int level,
                                     TranslateFn&& translate_by) {
    BasicContext<L> ctx;
    std::set<std::vector<std::vector<L>>> seen;
    for (int z = 0; z < kAlphabetSize; ++z) {
        auto t = make_tonality(translate_by(w, z), level);
        auto key = t.degree_chords;
        std::sort(key.begin(), key.end());
        if (seen.insert(std::move(key)).second)
            ctx.push_back(std::move(t));
    }
    return ctx;
}

} // namespace detail

inline Context natural_context(const Word& w, int level) {
    return detail::natural_context_impl(
        w, level, [](const Word& v, int z) { return translated(v, z); });
}

// The named context families used throughout the cadence fixtures.
inline Context standard_context(const std::string& name, int level) {
    auto translates = [&](const Word& w, Context& ctx) {
        for (int z = 0; z < kAlphabetSize; ++z)
            ctx.push_back(make_tonality(translated(w, z), level));
    };
    Context ctx;
    if (name == "major") {
        translates(named_word("major"), ctx);
    } else if (name == "minor") {
        translates(named_word("minor"), ctx);
    } else if (name == "classical") {
        translates(named_word("major"), ctx);
        translates(named_word("minor"), ctx);
    } else if (name == "gregorian") {
        // the seven church modes in all twelve transpositions
        for (int z = 0; z < kAlphabetSize; ++z)
            for (int i = 1; i <= 7; ++i)
                ctx.push_back(make_tonality(
                    translated(mode(named_word("major"), i), z), level));
    } else if (name == "mazzola") {
        for (const Word& w : enumerate_words(7, true))
            ctx.push_back(make_tonality(w, level));
    } else if (name == "jewish") {
        translates(named_word("jewish"), ctx);
    } else {
        throw UnknownName("standard_context: unknown family '" + name + "'");
    }
    return ctx;
}

// Number of (word, level) tonalities over all nonrepetitive letter sets,
// computed by explicit enumeration.
inline long count_all_tonalities() {
    long total = 0;
    for (int n = 5; n <= kAlphabetSize; ++n)
        total += static_cast<long>(enumerate_words(n, true).size()) *
                 maxlevel_for_size(n);
    return total;
}

// ---------------------------------------------------------------------------
// Harmony-law predicates
// ---------------------------------------------------------------------------

inline bool law_resolution_on_tonic(const HarmonicWord& hw,
                                    const Tonality& t) {
    return !hw.empty() && contains(t, hw) && hw.back() == t.degree_chords[0];
}

using HarmonyLaw = std::function<bool(const HarmonicWord&, const Tonality&)>;

inline HarmonicWord translated_hw(const HarmonicWord& hw, int z) {
    HarmonicWord out;
    out.reserve(hw.size());
    for (const auto& c : hw)
        out.push_back(translated(c, z));
    return out;
}

// A law is translation-invariant on (hw, t) at shift z when it gives the
// same verdict on the translated pair.
inline bool check_translation_invariance(const HarmonyLaw& law,
                                         const HarmonicWord& hw,
                                         const Tonality& t, Letter z) {
    return law(hw, t) ==
           law(translated_hw(hw, z),
               make_tonality(translated(t.word, z), t.level));
}

} // namespace harmonium
