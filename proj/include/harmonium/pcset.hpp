#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace harmonium {

// A pitch class is a residue modulo 12; words are finite letter sequences.
using Letter = int;
using Word   = std::vector<Letter>;

inline constexpr int kAlphabetSize = 12;

inline Letter normalize_pc(int x) {
    int r = x % kAlphabetSize;
    return r < 0 ? r + kAlphabetSize : r;
}

inline bool nonrepetitive(const Word& w) {
    std::set<Letter> seen(w.begin(), w.end());
    return seen.size() == w.size();
}

// ---------------------------------------------------------------------------
// The 24-element translation/inversion group: x -> shift + x  (invert=false)
// or x -> shift - x (invert=true).
// ---------------------------------------------------------------------------
struct TIMap {
    bool invert = false;
    Letter shift = 0;

    Letter operator()(Letter x) const {
        return normalize_pc(invert ? shift - x : shift + x);
    }
    friend bool operator==(const TIMap&, const TIMap&) = default;
};

inline TIMap translate_map(int z) { return TIMap{false, normalize_pc(z)}; }
inline TIMap invert_map(int z = 0) { return TIMap{true, normalize_pc(z)}; }

inline TIMap compose(const TIMap& g, const TIMap& h) {
    // (g ∘ h)(x) = g(h(x))
    if (!g.invert)
        return TIMap{h.invert, normalize_pc(g.shift + h.shift)};
    return TIMap{!h.invert, normalize_pc(g.shift - h.shift)};
}

inline std::vector<TIMap> all_ti_maps() {
    std::vector<TIMap> maps;
    maps.reserve(24);
    for (int inv = 0; inv < 2; ++inv)
        for (int z = 0; z < kAlphabetSize; ++z)
            maps.push_back(TIMap{inv != 0, z});
    return maps;
}

inline Word word_transform(const Word& w, const TIMap& m) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w)
        out.push_back(m(x));
    return out;
}

inline Word translated(const Word& w, int z) {
    return word_transform(w, translate_map(z));
}

inline Word inverted(const Word& w) {
    return word_transform(w, invert_map(0));
}

// ---------------------------------------------------------------------------
// Equivalences and interval vectors
// ---------------------------------------------------------------------------
enum class Equivalence { translational, inversional };

inline bool equivalent(const Word& w1, const Word& w2, Equivalence rel) {
    if (w1.size() != w2.size())
        return false;
    switch (rel) {
    case Equivalence::translational:
        for (int z = 0; z < kAlphabetSize; ++z)
            if (translated(w1, z) == w2)
                return true;
        return false;
    case Equivalence::inversional:
        return inverted(w1) == w2;
    }
    return false;
}

// Successive letter differences; a complete invariant of translational
// equivalence.
inline std::vector<Letter> interval_vector(const Word& w) {
    if (w.size() < 2)
        throw LengthTooShort("interval_vector: need at least two letters");
    std::vector<Letter> steps;
    steps.reserve(w.size() - 1);
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        steps.push_back(normalize_pc(w[k + 1] - w[k]));
    return steps;
}

// Interval vector extended with the wraparound step; entries sum to 0 mod 12.
inline std::vector<Letter> cyclic_step_vector(const Word& w) {
    auto steps = interval_vector(w);
    steps.push_back(normalize_pc(w.front() - w.back()));
    return steps;
}

// ---------------------------------------------------------------------------
// Modes, chords, levels
// ---------------------------------------------------------------------------

// i-th mode = left rotation by i-1 positions (degrees are 1-based).
template <class L>
std::vector<L> mode(const std::vector<L>& w, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > w.size())
        throw DegreeOutOfRange("mode: degree " + std::to_string(i) +
                               " not in 1.." + std::to_string(w.size()));
    std::vector<L> out(w.begin() + (i - 1), w.end());
    out.insert(out.end(), w.begin(), w.begin() + (i - 1));
    return out;
}

// Largest chord level that adds no repeated letter: |w|-2 for odd length,
// |w|/2-2 for even length.
inline int maxlevel_for_size(std::size_t n) {
    if (n < 5)
        throw WordTooShort("maxlevel: need at least five letters");
    return n % 2 ? static_cast<int>(n) - 2 : static_cast<int>(n) / 2 - 2;
}

template <class L>
int maxlevel(const std::vector<L>& w) {
    return maxlevel_for_size(w.size());
}

// Chord of degree i at level n: the n+2 letters at 1-based positions
// 1,3,5,...,2(n+1)+1 of mode(w,i), positions taken cyclically.
template <class L>
std::vector<L> chord(const std::vector<L>& w, int i, int level) {
    if (w.size() < 5 ||
        std::set<L>(w.begin(), w.end()).size() != w.size())
        throw WordTooShortOrRepetitive(
            "chord: word must be nonrepetitive with at least five letters");
    if (i < 1 || static_cast<std::size_t>(i) > w.size())
        throw DegreeOutOfRange("chord: degree " + std::to_string(i) +
                               " not in 1.." + std::to_string(w.size()));
    if (level < 1 || level > maxlevel(w))
        throw LevelOutOfRange("chord: level " + std::to_string(level) +
                              " not in 1.." + std::to_string(maxlevel(w)));
    std::vector<L> m = mode(w, i);
    std::vector<L> out;
    out.reserve(level + 2);
    for (int j = 0; j <= level + 1; ++j)
        out.push_back(m[(2 * j) % m.size()]);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

// Nonrepetitive enumeration lists letter-sets as ascending words (the
// convention behind the 792/4095 counts); pass all_orderings=true for every
// injective sequence instead.  Repetitive enumeration lists all 12^n words.
// Both orders are lexicographic.
inline std::vector<Word> enumerate_words(int n, bool nonrepetitive_only,
                                         bool all_orderings = false) {
    if (n < 0 || (nonrepetitive_only && n > kAlphabetSize))
        throw LengthTooShort("enumerate_words: bad length " +
                             std::to_string(n));
    std::vector<Word> out;
    Word cur;
    if (!nonrepetitive_only) {
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                out.push_back(cur);
                return;
            }
            for (int x = 0; x < kAlphabetSize; ++x) {
                cur.push_back(x);
                self(self, depth + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }
    if (all_orderings) {
        std::array<bool, kAlphabetSize> used{};
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                out.push_back(cur);
                return;
            }
            for (int x = 0; x < kAlphabetSize; ++x) {
                if (used[x])
                    continue;
                used[x] = true;
                cur.push_back(x);
                self(self, depth + 1);
                cur.pop_back();
                used[x] = false;
            }
        };
        rec(rec, 0);
        return out;
    }
    // ascending letter-sets
    auto rec = [&](auto&& self, int next, int depth) -> void {
        if (depth == n) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x < kAlphabetSize; ++x) {
            cur.push_back(x);
            self(self, x + 1, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// The word catalog (root-0 forms)
// ---------------------------------------------------------------------------
inline const std::map<std::string, Word>& word_catalog() {
    static const std::map<std::string, Word> catalog = {
        {"major", {0, 2, 4, 5, 7, 9, 11}},
        {"minor", {0, 2, 3, 5, 7, 8, 10}},
        {"harmonicminor", {0, 2, 3, 5, 7, 8, 11}},
        {"dorian", {0, 2, 3, 5, 7, 9, 10}},
        {"phrigian", {0, 1, 3, 5, 7, 8, 10}},
        {"lydian", {0, 2, 4, 6, 7, 9, 11}},
        {"mixolydian", {0, 2, 4, 5, 7, 9, 10}},
        {"locrian", {0, 1, 3, 5, 6, 8, 10}},
        {"tziganminor", {0, 2, 3, 6, 7, 8, 11}},
        {"jewish", {0, 1, 4, 5, 7, 8, 10}},
        {"indian", {0, 1, 4, 5, 7, 8, 11}},
        {"majorpentatonic", {0, 2, 4, 7, 9}},
        {"minorpentatonic", {3, 5, 7, 10, 0}},
        {"blues", {0, 3, 5, 6, 7, 10}},
        {"esatonal", {0, 2, 4, 6, 8, 10}},
        {"augmented", {0, 3, 4, 7, 8, 11}},
        {"halfwholediminished", {0, 1, 3, 4, 6, 7, 9, 10}},
        {"wholehalfdiminished", {0, 2, 3, 5, 6, 8, 9, 11}},
        {"wholetonediminished", {0, 1, 3, 4, 6, 8, 10}},
        {"bebopmajor", {0, 2, 4, 5, 7, 8, 9, 11}},
        {"bebopdominant", {0, 2, 4, 5, 7, 9, 10, 11}},
        {"chromatic", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
    };
    return catalog;
}

inline Word named_word(const std::string& name, Letter root = 0) {
    auto it = word_catalog().find(name);
    if (it == word_catalog().end())
        throw UnknownName("named_word: unknown catalog key '" + name + "'");
    return translated(it->second, root);
}

// ---------------------------------------------------------------------------
// Symmetries and prefixes
// ---------------------------------------------------------------------------
enum class SymmetryMode { pointwise, setwise };

inline std::vector<TIMap> symmetry_group(const Word& w, SymmetryMode sm) {
    std::vector<TIMap> group;
    std::set<Letter> letters(w.begin(), w.end());
    for (const TIMap& g : all_ti_maps()) {
        bool ok = true;
        if (sm == SymmetryMode::pointwise) {
            for (Letter x : w)
                if (g(x) != x) {
                    ok = false;
                    break;
                }
        } else {
            for (Letter x : letters)
                if (!letters.count(g(x))) {
                    ok = false;
                    break;
                }
        }
        if (ok)
            group.push_back(g);
    }
    return group;
}

template <class T>
bool is_proper_prefix(const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

} // namespace harmonium
