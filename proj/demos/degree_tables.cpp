// Prints the degree-chord tables of a few catalog tonalities at every level,
// plus the II-V-I progression of each — a quick tour of the tonal machinery.

#include <iostream>

#include <harmonium/harmonium.hpp>

using namespace harmonium;

namespace {

void print_chord(const Word& c) {
    std::cout << "{";
    for (std::size_t i = 0; i < c.size(); ++i)
        std::cout << (i ? "," : "") << c[i];
    std::cout << "}";
}

void print_tonality(const std::string& name, int level) {
    Word w = named_word(name);
    Tonality t = make_tonality(w, level);
    std::cout << name << " level " << level << ":\n";
    for (std::size_t i = 0; i < t.degree_chords.size(); ++i) {
        std::cout << "  " << (i + 1) << ": ";
        print_chord(t.degree_chords[i]);
        std::cout << "\n";
    }
    std::cout << "  II-V-I: ";
    for (const auto& c : hw_from_degrees(t, {2, 5, 1})) {
        print_chord(c);
        std::cout << " ";
    }
    std::cout << "\n";
}

} // namespace

int main() {
    for (const auto& name : {"major", "minor", "jewish", "blues"}) {
        Word w = named_word(name);
        for (int level = 1; level <= maxlevel(w); ++level)
            print_tonality(name, level);
        std::cout << "\n";
    }
    std::cout << "tonalities over the full alphabet: "
              << count_all_tonalities() << "\n";
    return 0;
}
