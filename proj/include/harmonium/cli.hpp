#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "consonance.hpp"
#include "errors.hpp"
#include "euler.hpp"
#include "io.hpp"
#include "modulation.hpp"
#include "pcset.hpp"
#include "pythag.hpp"
#include "rational.hpp"
#include "scales.hpp"
#include "tonality.hpp"
#include "wav.hpp"

namespace harmonium::cli {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline Word parse_pc_list(const std::string& s) {
    Word w;
    for (const auto& tok : split(s, ','))
        w.push_back(std::stoi(tok));
    return w;
}

inline CadenceRule rule_from(const std::string& name) {
    if (name == "strict")
        return CadenceRule::strict;
    if (name == "declared")
        return CadenceRule::declared;
    throw UnknownName("cadence rule must be strict or declared, got " + name);
}

inline std::string point_str(const EulerPoint& p) {
    return "(" + p.e2.str() + "," + p.e3.str() + "," + p.e5.str() + ")";
}

inline std::string timap_str(const TIMap& m) {
    return (m.invert ? std::string("TI(") : std::string("T(")) +
           std::to_string(m.shift) + ")";
}

} // namespace detail

// Runs one command against the given streams; returns the process exit code
// (0 success, 1 domain error, 2 usage error).  `args` excludes the program
// name.
inline int dispatch(std::vector<std::string> args, std::ostream& out,
                    std::ostream& err) {
    CLI::App app{"Exact-arithmetic engine for tonal harmony: words, chords, "
                 "tonalities, cadences, modulations, tuning lattices and "
                 "consonance."};
    app.name("harmonium");
    app.fallthrough();
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of aligned tables");
    std::string config_path;
    app.add_option("--config", config_path,
                   "key=value config file (default: $HARMONIUM_CONFIG)");
    std::string ref_note_flag, ref_time_flag;
    int sample_rate_flag = 0;
    std::uint64_t budget_flag = 0;
    app.add_option("--ref-note", ref_note_flag,
                   "reference frequency in Hz (rational)");
    app.add_option("--ref-time", ref_time_flag,
                   "whole-note duration in seconds (rational)");
    app.add_option("--sample-rate", sample_rate_flag, "render sample rate");
    app.add_option("--budget", budget_flag, "search budget");

    auto resolve_config = [&]() {
        Config cfg = config_path.empty() ? config_from_env()
                                         : load_config_file(config_path);
        if (!ref_note_flag.empty())
            cfg.reference_note = parse_rational(ref_note_flag);
        if (!ref_time_flag.empty())
            cfg.reference_time = parse_rational(ref_time_flag);
        if (sample_rate_flag > 0)
            cfg.sample_rate = sample_rate_flag;
        if (budget_flag > 0)
            cfg.search_budget = budget_flag;
        cfg.validate();
        return cfg;
    };

    auto emit = [&](const nlohmann::json& j, const std::string& table) {
        if (json)
            out << j.dump(2) << "\n";
        else
            out << table;
    };

    // ------------------------------------------------------------- scale --
    auto* scale = app.add_subcommand("scale", "frequency-level scales");
    scale->fallthrough();
    scale->require_subcommand(1);
    struct {
        std::string root = "132";
        std::string ratio = "3";
        int max_steps = 11;
        int count = 12;
        int divisions = 12;
    } sc;

    auto emit_rational_scale = [&](const GeneratedScale& s) {
        nlohmann::json j;
        j["notes"] = s.notes;
        j["closed"] = s.closed;
        j["period"] = s.period ? nlohmann::json(*s.period)
                               : nlohmann::json(nullptr);
        std::string table;
        for (const auto& n : s.notes)
            table += io::freq_str(n) + "\n";
        table += s.closed ? "closed: period " + std::to_string(*s.period) +
                                "\n"
                          : "open\n";
        emit(j, table);
    };
    auto emit_real_scale = [&](const RealGeneratedScale& s) {
        nlohmann::json j;
        j["notes"] = s.notes;
        j["closed"] = s.closed;
        j["period"] = s.period ? nlohmann::json(*s.period)
                               : nlohmann::json(nullptr);
        std::string table;
        for (double n : s.notes) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g\n", n);
            table += buf;
        }
        table += s.closed ? "closed: period " + std::to_string(*s.period) +
                                "\n"
                          : "open\n";
        emit(j, table);
    };

    auto* scale_gen =
        scale->add_subcommand("gen", "scale at a fixed rational interval");
    scale_gen->fallthrough();
    scale_gen->add_option("--root", sc.root, "seed frequency (rational)");
    scale_gen->add_option("--ratio", sc.ratio, "generator ratio (rational)");
    scale_gen->add_option("--max", sc.max_steps, "step bound");
    scale_gen->callback([&] {
        emit_rational_scale(scale_at_fixed_interval(
            parse_rational(sc.root), parse_rational(sc.ratio), sc.max_steps));
    });

    auto* scale_pyt =
        scale->add_subcommand("pyt", "natural cycle of fifths (ratio 3)");
    scale_pyt->fallthrough();
    scale_pyt->add_option("--root", sc.root, "seed frequency (rational)");
    scale_pyt->add_option("--count", sc.count, "number of notes");
    scale_pyt->callback([&] {
        emit_rational_scale(
            pythagorean_scale(parse_rational(sc.root), sc.count));
    });

    auto* scale_tmp =
        scale->add_subcommand("tempered", "N-equally-tempered scale");
    scale_tmp->fallthrough();
    scale_tmp->add_option("--root", sc.root, "seed frequency (rational)");
    scale_tmp->add_option("--divisions", sc.divisions, "octave divisions N");
    scale_tmp->callback([&] {
        emit_real_scale(tempered_scale(to_double(parse_rational(sc.root)),
                                       sc.divisions));
    });

    // ---------------------------------------------------------- tonality --
    auto* ton = app.add_subcommand("tonality",
                                   "degree-chord table of a tonality");
    ton->fallthrough();
    struct {
        std::string word = "major";
        int root = 0;
        int level = 1;
        int pyt_cycle = -1;
    } ta;
    ton->add_option("--word", ta.word, "catalog word name");
    ton->add_option("--root", ta.root, "translation of the word");
    ton->add_option("--level", ta.level, "chord level");
    ton->add_option("--pyt-cycle", ta.pyt_cycle,
                    "build over the Pythagorean alphabet at this cycle");
    ton->callback([&] {
        Word w = named_word(ta.word, ta.root);
        if (ta.pyt_cycle >= 0) {
            auto t = pyt_tonality(pyt_word(w, ta.pyt_cycle), ta.level);
            nlohmann::json j = t;
            std::string table = "word: " + io::chord_str(t.word) + "\n" +
                                "level: " + std::to_string(t.level) + "\n";
            for (std::size_t i = 0; i < t.degree_chords.size(); ++i)
                table += std::to_string(i + 1) + ": " +
                         io::chord_str(t.degree_chords[i]) + "\n";
            emit(j, table);
            return;
        }
        auto t = make_tonality(w, ta.level);
        nlohmann::json j = t;
        j["maxlevel"] = maxlevel(w);
        std::string table = "word: " + io::chord_str(t.word) + "\n" +
                            "level: " + std::to_string(t.level) + "\n" +
                            "maxlevel: " + std::to_string(maxlevel(w)) + "\n";
        for (std::size_t i = 0; i < t.degree_chords.size(); ++i)
            table += std::to_string(i + 1) + ": " +
                     io::chord_str(t.degree_chords[i]) + "\n";
        emit(j, table);
    });

    // ------------------------------------------------------------ pivots --
    auto* piv = app.add_subcommand(
        "pivots", "chords shared verbatim by two tonalities");
    piv->fallthrough();
    struct {
        std::string word1 = "major", word2;
        int root1 = 0, root2 = 0;
        int level = 1, level2 = 0;
    } pa;
    piv->add_option("--word1", pa.word1, "first word name");
    piv->add_option("--root1", pa.root1, "first root");
    piv->add_option("--word2", pa.word2, "second word name (default word1)");
    piv->add_option("--root2", pa.root2, "second root");
    piv->add_option("--level", pa.level, "chord level");
    piv->add_option("--level2", pa.level2,
                    "second chord level (default --level)");
    piv->callback([&] {
        auto t1 = make_tonality(named_word(pa.word1, pa.root1), pa.level);
        auto t2 = make_tonality(
            named_word(pa.word2.empty() ? pa.word1 : pa.word2, pa.root2),
            pa.level2 > 0 ? pa.level2 : pa.level);
        auto pivots = pivotal_degrees(t1, t2);
        std::vector<int> first, second;
        HarmonicWord chords;
        for (const auto& p : pivots) {
            first.push_back(p.degree_in_first);
            second.push_back(p.degree_in_second);
            chords.push_back(p.chord);
        }
        nlohmann::json j{{"degrees_in_first", first},
                         {"degrees_in_second", second},
                         {"chords", chords}};
        std::string table = "degrees: {" + io::degrees_str(first) + "," +
                            io::degrees_str(second) + "}\n" +
                            "chords: " + io::hw_str<Letter>(chords) + "\n";
        emit(j, table);
    });

    // ---------------------------------------------------------- cadences --
    auto* cad = app.add_subcommand(
        "cadences", "harmonic words declaring a tonality within a context");
    cad->fallthrough();
    struct {
        std::string word = "major";
        int root = 0;
        int level = 1;
        int maxlen = 1;
        std::string context = "natural";
        std::string rule = "strict";
        bool minimal = false;
    } ca;
    cad->add_option("--word", ca.word, "catalog word name");
    cad->add_option("--root", ca.root, "translation of the word");
    cad->add_option("--level", ca.level, "chord level");
    cad->add_option("--maxlen", ca.maxlen, "harmonic-word length bound");
    cad->add_option("--context", ca.context,
                    "natural | major | minor | classical | gregorian | "
                    "jewish | mazzola");
    cad->add_option("--rule", ca.rule, "strict | declared");
    cad->add_flag("--minimal", ca.minimal,
                  "keep only cadences with no cadential proper prefix");
    cad->callback([&] {
        Word w = named_word(ca.word, ca.root);
        auto t = make_tonality(w, ca.level);
        Context ctx = ca.context == "natural"
                          ? natural_context(w, ca.level)
                          : standard_context(ca.context, ca.level);
        CadenceOptions opts;
        opts.minimal = ca.minimal;
        opts.rule = detail::rule_from(ca.rule);
        opts.budget = resolve_config().search_budget;
        auto result = cadences(t, ctx, ca.maxlen, opts);
        nlohmann::json j = result;
        std::string table = "count: " + std::to_string(result.size()) + "\n";
        for (const auto& c : result)
            table += io::degrees_str(c.degrees) + ": " +
                     io::hw_str<Letter>(c.chords) + "\n";
        emit(j, table);
    });

    // ---------------------------------------------------------- modulate --
    auto* mod = app.add_subcommand(
        "modulate", "pivot+cadence modulations between two tonalities");
    mod->fallthrough();
    struct {
        std::string word1 = "major", word2 = "major";
        int root1 = 0, root2 = 7;
        int level = 1;
        int maxlen = 2;
        std::string context = "natural";
        std::string rule = "strict";
        bool mazzola = false;
    } ma;
    mod->add_option("--word1", ma.word1, "source word name");
    mod->add_option("--root1", ma.root1, "source root");
    mod->add_option("--word2", ma.word2, "target word name");
    mod->add_option("--root2", ma.root2, "target root");
    mod->add_option("--level", ma.level, "chord level");
    mod->add_option("--maxlen", ma.maxlen, "cadence length bound");
    mod->add_option("--context", ma.context,
                    "cadence context: natural | a standard context name");
    mod->add_option("--rule", ma.rule, "strict | declared");
    mod->add_flag("--mazzola", ma.mazzola,
                  "use the symmetry-based modulator instead of pivots");
    mod->callback([&] {
        auto t1 = make_tonality(named_word(ma.word1, ma.root1), ma.level);
        auto t2 = make_tonality(named_word(ma.word2, ma.root2), ma.level);
        CadenceOptions opts;
        opts.rule = detail::rule_from(ma.rule);
        opts.budget = resolve_config().search_budget;
        if (ma.mazzola) {
            auto result = mazzola_modulations(t1, t2, ma.maxlen, opts);
            nlohmann::json j = nlohmann::json::array();
            std::string table =
                "count: " + std::to_string(result.size()) + "\n";
            for (const auto& m : result) {
                j.push_back(nlohmann::json{{"modulator", m.modulator},
                                           {"cadence", m.cadence}});
                table += detail::timap_str(m.modulator) + " cadence " +
                         io::degrees_str(m.cadence.degrees) + "\n";
            }
            emit(j, table);
            return;
        }
        Context ctx = ma.context == "natural"
                          ? natural_context(t2.word, t2.level)
                          : standard_context(ma.context, ma.level);
        auto result = modulations_with_context(t1, t2, ctx, ma.maxlen, opts);
        nlohmann::json j = result;
        std::string table = "count: " + std::to_string(result.size()) + "\n";
        for (const auto& m : result)
            table += "pivot " + std::to_string(m.pivot.degree_in_first) +
                     "/" + std::to_string(m.pivot.degree_in_second) + " " +
                     io::chord_str(m.pivot.chord) + " cadence " +
                     io::degrees_str(m.cadence.degrees) + "\n";
        emit(j, table);
    });

    // ------------------------------------------------------------- piece --
    auto* piece = app.add_subcommand("piece", "tonal musical pieces");
    piece->fallthrough();
    piece->require_subcommand(1);
    struct {
        int level = 1;
        int steps = 12;
        std::string word = "major";
        int root = 0;
        std::vector<int> degrees{2, 5, 1};
    } pc;

    auto* piece_fifths = piece->add_subcommand(
        "fifths", "II-V-I walk around the fifths cycle");
    piece_fifths->fallthrough();
    piece_fifths->add_option("--level", pc.level, "chord level");
    piece_fifths->add_option("--steps", pc.steps, "fifth steps (roots - 1)");
    piece_fifths->callback([&] {
        auto chords = fifths_cycle_piece(pc.level, pc.steps);
        nlohmann::json j = chords;
        std::string table;
        for (const auto& c : chords)
            table += io::chord_str(c) + "\n";
        emit(j, table);
    });

    auto* piece_prog = piece->add_subcommand(
        "progression", "harmonic word of a degree sequence");
    piece_prog->fallthrough();
    piece_prog->add_option("--word", pc.word, "catalog word name");
    piece_prog->add_option("--root", pc.root, "translation of the word");
    piece_prog->add_option("--level", pc.level, "chord level");
    piece_prog->add_option("--degrees", pc.degrees, "degree sequence")
        ->delimiter(',');
    piece_prog->callback([&] {
        auto t = make_tonality(named_word(pc.word, pc.root), pc.level);
        auto hw = hw_from_degrees(t, pc.degrees);
        nlohmann::json j = hw;
        std::string table;
        for (const auto& c : hw)
            table += io::chord_str(c) + "\n";
        emit(j, table);
    });

    // ------------------------------------------------------------ pythag --
    auto* pyt = app.add_subcommand("pythag", "the Pythagorean ansatz");
    pyt->fallthrough();
    pyt->require_subcommand(1);
    struct {
        int cycles = 0;
        std::string construction = "chain";
        unsigned digits = 12;
        std::string word = "major";
        int root = 0;
        int cycle = 0;
        int raise = 0;
        int level = 1;
        int maxlen = 2;
    } pg;

    auto* pyt_scale = pyt->add_subcommand(
        "scale", "frequencies of the cycle-indexed alphabet");
    pyt_scale->fallthrough();
    pyt_scale->add_option("--cycles", pg.cycles, "largest cycle to list");
    pyt_scale->add_option("--construction", pg.construction,
                          "chain | block");
    pyt_scale->add_option("--digits", pg.digits, "decimal digits shown");
    pyt_scale->callback([&] {
        if (pg.construction != "chain" && pg.construction != "block")
            throw UnknownName("construction must be chain or block, got " +
                              pg.construction);
        auto construction = pg.construction == "chain"
                                ? PytConstruction::chain
                                : PytConstruction::block;
        Config cfg = resolve_config();
        nlohmann::json rows = nlohmann::json::array();
        std::string table;
        for (const auto& l : pyt_alphabet(pg.cycles)) {
            Rational f = pyt_freq(l, construction, cfg.reference_note);
            rows.push_back(nlohmann::json{
                {"pc", l.pc}, {"cycle", l.cycle}, {"freq", f}});
            table += io::letter_str(l) + ": " +
                     to_decimal_string(f, pg.digits) + "\n";
        }
        emit(rows, table);
    });

    auto* pyt_comma = pyt->add_subcommand(
        "comma-modulate",
        "modulations between a tonality and a comma displacement of it");
    pyt_comma->fallthrough();
    pyt_comma->add_option("--word", pg.word, "catalog word name");
    pyt_comma->add_option("--root", pg.root, "translation of the word");
    pyt_comma->add_option("--cycle", pg.cycle, "base cycle of the word");
    pyt_comma->add_option("--raise", pg.raise, "letter position to raise")
        ->required();
    pyt_comma->add_option("--level", pg.level, "chord level");
    pyt_comma->add_option("--maxlen", pg.maxlen, "cadence length bound");
    pyt_comma->callback([&] {
        PytWord pw1 = pyt_word(named_word(pg.word, pg.root), pg.cycle);
        PytWord pw2 = cycle_raised(pw1, pg.raise);
        auto t1 = pyt_tonality(pw1, pg.level);
        auto t2 = pyt_tonality(pw2, pg.level);
        auto ctx = pyt_natural_context(pw1, pg.level);
        auto pivots = pyt_pivotal(t1, t2);
        CadenceOptions opts = comma_cadence_options();
        opts.budget = resolve_config().search_budget;
        auto mods = comma_modulations(t1, t2, ctx, pg.maxlen, opts);
        std::vector<int> first, second;
        for (const auto& p : pivots) {
            first.push_back(p.degree_in_first);
            second.push_back(p.degree_in_second);
        }
        nlohmann::json j{{"pivots_in_first", first},
                         {"pivots_in_second", second},
                         {"modulations", mods}};
        std::string table = "pivots: {" + io::degrees_str(first) + "," +
                            io::degrees_str(second) + "}\n" +
                            "modulations: " + std::to_string(mods.size()) +
                            "\n";
        for (const auto& m : mods)
            table += "pivot " + std::to_string(m.pivot.degree_in_first) +
                     "/" + std::to_string(m.pivot.degree_in_second) +
                     " cadence " + io::degrees_str(m.cadence.degrees) + "\n";
        emit(j, table);
    });

    // ------------------------------------------------------------- euler --
    auto* eul = app.add_subcommand("euler", "the 5-limit tuning lattice");
    eul->fallthrough();
    eul->require_subcommand(1);
    struct {
        std::string ratio = "1";
    } ea;

    auto* eul_point = eul->add_subcommand(
        "point", "lattice point of a 5-limit ratio");
    eul_point->fallthrough();
    eul_point->add_option("ratio", ea.ratio, "ratio p/q")->required();
    eul_point->callback([&] {
        Rational r = parse_rational(ea.ratio);
        EulerPoint p = point_from_ratio(r);
        auto flags = classify_point(p);
        nlohmann::json j{{"point", p},
                         {"pitch", pitch_of_point(p)},
                         {"flags", flags}};
        std::string table = "point: " + detail::point_str(p) + "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "pitch: %.6f\n", pitch_of_point(p));
        table += buf;
        table += "flags:";
        for (const auto& f : flags)
            table += " " + f;
        table += "\n";
        emit(j, table);
    });

    auto* eul_gradus =
        eul->add_subcommand("gradus", "gradus suavitatis of a ratio");
    eul_gradus->fallthrough();
    eul_gradus->add_option("ratio", ea.ratio, "ratio p/q")->required();
    eul_gradus->callback([&] {
        Integer g = gradus(parse_rational(ea.ratio));
        emit(nlohmann::json{{"gradus", g.convert_to<long long>()}},
             "gradus: " + g.str() + "\n");
    });

    auto* eul_esm =
        eul->add_subcommand("esm", "empirical simplicity measure");
    eul_esm->fallthrough();
    eul_esm->add_option("ratio", ea.ratio, "ratio p/q")->required();
    eul_esm->callback([&] {
        Rational v = esm(parse_rational(ea.ratio));
        emit(nlohmann::json{{"esm", v}}, "esm: " + v.str() + "\n");
    });

    auto* eul_commas = eul->add_subcommand("commas", "the two commas");
    eul_commas->fallthrough();
    eul_commas->callback([&] {
        auto [kf, kt] = commas();
        nlohmann::json j{
            {"Kf", {{"vector", kf.vector}, {"ratio", kf.ratio},
                    {"cents", kf.cents}}},
            {"Kt", {{"vector", kt.vector}, {"ratio", kt.ratio},
                    {"cents", kt.cents}}}};
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "Kf: %s = %s = %.6f cents\nKt: %s = %s = %.6f cents\n",
                      detail::point_str(kf.vector).c_str(),
                      kf.ratio.str().c_str(), kf.cents,
                      detail::point_str(kt.vector).c_str(),
                      kt.ratio.str().c_str(), kt.cents);
        emit(j, buf);
    });

    auto* eul_vogel = eul->add_subcommand(
        "vogel", "Vogel's chromatic just-intonation scale");
    eul_vogel->fallthrough();
    eul_vogel->callback([&] {
        Config cfg = resolve_config();
        nlohmann::json rows = nlohmann::json::array();
        std::string table;
        for (const auto& row : vogel_chromatic(cfg.reference_note)) {
            rows.push_back(nlohmann::json{{"name", row.name},
                                          {"ratio", row.ratio},
                                          {"point", row.point},
                                          {"freq", row.frequency},
                                          {"cents", row.cents}});
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-3s %-6s %s %.6f\n",
                          row.name.c_str(), row.ratio.str().c_str(),
                          detail::point_str(row.point).c_str(), row.cents);
            table += buf;
        }
        emit(rows, table);
    });

    auto* eul_diatonic = eul->add_subcommand(
        "diatonic", "the just diatonic scale of the reference note");
    eul_diatonic->fallthrough();
    eul_diatonic->callback([&] {
        Config cfg = resolve_config();
        nlohmann::json rows = nlohmann::json::array();
        std::string table;
        for (const auto& row : just_diatonic(cfg.reference_note)) {
            rows.push_back(nlohmann::json{{"name", row.name},
                                          {"ratio", row.ratio},
                                          {"point", row.point},
                                          {"freq", row.frequency},
                                          {"cents", row.cents}});
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-2s %-5s %s %.6f\n",
                          row.name.c_str(), row.ratio.str().c_str(),
                          to_decimal_string(row.frequency, 4).c_str(),
                          row.cents);
            table += buf;
        }
        emit(rows, table);
    });

    // -------------------------------------------------------- consonance --
    auto* cons = app.add_subcommand(
        "consonance", "physical consonance index of a chord of notes");
    cons->fallthrough();
    struct {
        std::vector<std::string> notes;
        std::string instrument = "ideal";
        int nmax = 8;
        std::string eps = "0";
        double amplitude = 1.0;
    } co;
    cons->add_option("--notes", co.notes, "pulsations as rationals p/q")
        ->required()
        ->expected(-2);
    cons->add_option("--instrument", co.instrument, "ideal | pure:k");
    cons->add_option("--nmax", co.nmax, "lattice bound");
    cons->add_option("--eps", co.eps, "tolerance (rational)");
    cons->add_option("--amplitude", co.amplitude, "base amplitude");
    cons->callback([&] {
        Spectrum spec;
        if (co.instrument == "ideal")
            spec = ideal_spectrum(co.amplitude, std::max(co.nmax, 1));
        else if (co.instrument.rfind("pure:", 0) == 0)
            spec = pure_oscillator(co.amplitude,
                                   std::stoi(co.instrument.substr(5)));
        else
            throw UnknownName("instrument must be ideal or pure:k, got " +
                              co.instrument);
        std::vector<Sound> sounds;
        for (const auto& n : co.notes)
            sounds.push_back({parse_rational(n), spec});
        auto report =
            consonance_report(sounds, co.nmax, parse_rational(co.eps),
                              resolve_config().search_budget);
        nlohmann::json j{{"index", report.index},
                         {"divergent", report.divergent}};
        char buf[96];
        std::snprintf(buf, sizeof buf, "index: %.12g\ndivergent: %s\n",
                      report.index, report.divergent ? "true" : "false");
        emit(j, buf);
    });

    // --------------------------------------------------------- enumerate --
    auto* enu = app.add_subcommand("enumerate", "combinatorial counts");
    enu->fallthrough();
    enu->require_subcommand(1);
    struct {
        int length = 7;
        bool repetitive = false;
        bool all_orderings = false;
        int limit = 0;
    } en;

    auto* enu_words = enu->add_subcommand("words", "words of a given length");
    enu_words->fallthrough();
    enu_words->add_option("--length", en.length, "word length");
    enu_words->add_flag("--repetitive", en.repetitive,
                        "allow repeated letters");
    enu_words->add_flag("--all-orderings", en.all_orderings,
                        "count orderings instead of ascending sets");
    enu_words->add_option("--limit", en.limit, "print at most this many");
    enu_words->callback([&] {
        auto words =
            enumerate_words(en.length, !en.repetitive, en.all_orderings);
        nlohmann::json j{{"count", words.size()}};
        std::string table =
            "count: " + std::to_string(words.size()) + "\n";
        if (en.limit > 0) {
            nlohmann::json listed = nlohmann::json::array();
            for (std::size_t i = 0;
                 i < words.size() && i < static_cast<std::size_t>(en.limit);
                 ++i) {
                listed.push_back(words[i]);
                table += io::chord_str(words[i]) + "\n";
            }
            j["words"] = listed;
        }
        emit(j, table);
    });

    auto* enu_ton = enu->add_subcommand(
        "tonalities", "count of all tonalities over the alphabet");
    enu_ton->fallthrough();
    enu_ton->callback([&] {
        long n = count_all_tonalities();
        emit(nlohmann::json{{"count", n}},
             "count: " + std::to_string(n) + "\n");
    });

    // ------------------------------------------------------------ render --
    auto* ren = app.add_subcommand("render", "write a piece as a WAV file");
    ren->fallthrough();
    struct {
        std::string out_path;
        std::string chords;
        std::string durations = "crotchet";
        std::string word = "major";
        int root = 0;
        int level = 1;
        std::vector<int> degrees;
        std::string duration = "crotchet";
        std::string tuning = "tempered";
        int cycle = 0;
        bool ramp = false;
    } ra;
    ren->add_option("--out", ra.out_path, "output WAV path")->required();
    ren->add_option("--chords", ra.chords,
                    "semicolon-separated chords of comma-separated pitch "
                    "classes, e.g. 0,4,7;2,7,11");
    ren->add_option("--durations", ra.durations,
                    "semicolon-separated durations (names or rationals); a "
                    "single value repeats");
    ren->add_option("--word", ra.word, "catalog word name (degree mode)");
    ren->add_option("--root", ra.root, "translation of the word");
    ren->add_option("--level", ra.level, "chord level");
    ren->add_option("--degrees", ra.degrees,
                    "degree sequence rendered as chords")
        ->delimiter(',');
    ren->add_option("--duration", ra.duration,
                    "duration of every degree-mode event");
    ren->add_option("--tuning", ra.tuning,
                    "tempered | pyt (degree mode only)");
    ren->add_option("--cycle", ra.cycle, "Pythagorean cycle for --tuning pyt");
    ren->add_flag("--ramp", ra.ramp, "5 ms linear attack/release per event");
    ren->callback([&] {
        Config cfg = resolve_config();
        const double ref = to_double(cfg.reference_note);
        auto tempered_freq = [&](Letter pc) {
            return ref * std::exp2(normalize_pc(pc) / 12.0);
        };
        TimedPiece piece_out;
        if (!ra.chords.empty()) {
            auto durations = detail::split(ra.durations, ';');
            auto chord_texts = detail::split(ra.chords, ';');
            for (std::size_t i = 0; i < chord_texts.size(); ++i) {
                TimedEvent e;
                for (Letter pc : detail::parse_pc_list(chord_texts[i]))
                    e.frequencies.push_back(tempered_freq(pc));
                e.duration = parse_duration(
                    durations[std::min(i, durations.size() - 1)]);
                piece_out.events.push_back(std::move(e));
            }
        } else if (!ra.degrees.empty()) {
            Rational dur = parse_duration(ra.duration);
            if (ra.tuning == "pyt") {
                auto t = pyt_tonality(
                    pyt_word(named_word(ra.word, ra.root), ra.cycle),
                    ra.level);
                for (const auto& chord : hw_from_degrees(t, ra.degrees)) {
                    TimedEvent e;
                    for (const auto& l : chord)
                        e.frequencies.push_back(to_double(
                            pyt_freq(l, PytConstruction::chain,
                                     cfg.reference_note)));
                    e.duration = dur;
                    piece_out.events.push_back(std::move(e));
                }
            } else if (ra.tuning == "tempered") {
                auto t = make_tonality(named_word(ra.word, ra.root),
                                       ra.level);
                for (const auto& chord : hw_from_degrees(t, ra.degrees)) {
                    TimedEvent e;
                    for (Letter pc : chord)
                        e.frequencies.push_back(tempered_freq(pc));
                    e.duration = dur;
                    piece_out.events.push_back(std::move(e));
                }
            } else {
                throw UnknownName("tuning must be tempered or pyt, got " +
                                  ra.tuning);
            }
        } else {
            throw EmptyPiece("render: give --chords or --degrees");
        }
        RenderOptions opts;
        opts.ramp = ra.ramp;
        render_wav(piece_out, ra.out_path, cfg, opts);
        std::size_t count = 0;
        for (const auto& e : piece_out.events)
            count += static_cast<std::size_t>(event_sample_count(e, cfg));
        nlohmann::json j{{"path", ra.out_path},
                         {"samples", count},
                         {"sample_rate", cfg.sample_rate}};
        emit(j, "wrote " + ra.out_path + ": " + std::to_string(count) +
                    " samples at " + std::to_string(cfg.sample_rate) +
                    " Hz\n");
    });

    // -------------------------------------------------------------- parse --
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace harmonium::cli
