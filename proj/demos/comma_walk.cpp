// Walks the comma-displacement modulation story: raise one letter of the
// C-major Pythagorean word through a fifth cycle, list the pivots shared
// with the original tonality, and search for cadences that declare the
// displaced tonality inside the cycle-0 context.

#include <iostream>

#include <harmonium/harmonium.hpp>

using namespace harmonium;

namespace {

void print_pyt_chord(const PytWord& c) {
    std::cout << "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            std::cout << ",";
        std::cout << "{" << c[i].pc << "," << c[i].cycle << "}";
    }
    std::cout << "}";
}

} // namespace

int main() {
    const PytWord pw1 = pyt_word(named_word("major"), 0);
    const PytTonality t1 = pyt_tonality(pw1, 1);
    const PytContext ctx = pyt_natural_context(pw1, 1);

    for (int position : {5, 6, 7}) {
        const PytWord pw2 = cycle_raised(pw1, position);
        const PytTonality t2 = pyt_tonality(pw2, 1);

        std::cout << "raise at " << position << ": pivots";
        for (const auto& p : pyt_pivotal(t1, t2))
            std::cout << " " << p.degree_in_first << "/"
                      << p.degree_in_second;
        std::cout << "\n";

        auto mods = comma_modulations(t1, t2, ctx, 2);
        std::cout << "  modulations: " << mods.size() << "\n";
        for (const auto& m : mods) {
            std::cout << "  pivot ";
            print_pyt_chord(m.pivot.chord);
            std::cout << " cadence {";
            for (std::size_t i = 0; i < m.cadence.degrees.size(); ++i)
                std::cout << (i ? "," : "") << m.cadence.degrees[i];
            std::cout << "}\n";
        }
    }

    std::cout << "\nfrequency of the raised fifth {7,1}: "
              << to_decimal_string(pyt_freq({7, 1}), 12) << " Hz vs plain "
              << to_decimal_string(pyt_freq({7, 0}), 12) << " Hz\n";
    return 0;
}
