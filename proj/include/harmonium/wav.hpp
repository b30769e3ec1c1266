#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace harmonium {

// ---------------------------------------------------------------------------
// Timed pieces: chords as frequency lists, durations as exact fractions of
// the configured reference time.
// ---------------------------------------------------------------------------
struct TimedEvent {
    std::vector<double> frequencies; // Hz
    Rational duration;               // fraction of reference_time
};

struct TimedPiece {
    std::vector<TimedEvent> events;
};

struct RenderOptions {
    // Linear attack/release over 5 ms to suppress boundary clicks; off by
    // default — raw sine starts are the faithful behaviour.
    bool ramp = false;
    double ramp_seconds = 0.005;
};

// Number of samples an event occupies: round(duration * reference_time *
// sample_rate), computed exactly before the final rounding.
inline std::int64_t event_sample_count(const TimedEvent& e,
                                       const Config& cfg) {
    Rational exact = e.duration * cfg.reference_time * cfg.sample_rate;
    Integer num = boost::multiprecision::numerator(exact);
    Integer den = boost::multiprecision::denominator(exact);
    Integer rounded = (num * 2 + den) / (den * 2); // round half up
    return rounded.convert_to<std::int64_t>();
}

// Renders the piece: per event, the equal-amplitude sum of sines at the
// chord's frequencies, peak-normalized to 0.8 full scale, quantized by
// floor(32767 * x).  Phase restarts at every event.
inline std::vector<std::int16_t> render_samples(const TimedPiece& piece,
                                                const Config& cfg,
                                                const RenderOptions& opts =
                                                    {}) {
    if (piece.events.empty())
        throw EmptyPiece("render: piece has no events");
    cfg.validate();
    std::vector<std::int16_t> samples;
    std::vector<double> block;
    for (const auto& event : piece.events) {
        if (event.duration <= 0)
            throw NonPositive("render: event durations must be positive");
        const std::int64_t count = event_sample_count(event, cfg);
        block.assign(static_cast<std::size_t>(count), 0.0);
        for (double f : event.frequencies) {
            if (!(f > 0))
                throw NonPositiveFrequency(
                    "render: chord frequencies must be positive");
            const double step = 2.0 * std::numbers::pi * f / cfg.sample_rate;
            for (std::int64_t n = 0; n < count; ++n)
                block[static_cast<std::size_t>(n)] +=
                    std::sin(step * static_cast<double>(n));
        }
        double peak = 0;
        for (double x : block)
            peak = std::max(peak, std::abs(x));
        const double gain = peak > 0 ? 0.8 / peak : 0.0;
        const std::int64_t ramp_len =
            opts.ramp ? std::min<std::int64_t>(
                            count / 2,
                            static_cast<std::int64_t>(opts.ramp_seconds *
                                                      cfg.sample_rate))
                      : 0;
        for (std::int64_t n = 0; n < count; ++n) {
            double x = block[static_cast<std::size_t>(n)] * gain;
            if (ramp_len > 0) {
                if (n < ramp_len)
                    x *= static_cast<double>(n) / static_cast<double>(ramp_len);
                if (count - 1 - n < ramp_len)
                    x *= static_cast<double>(count - 1 - n) /
                         static_cast<double>(ramp_len);
            }
            samples.push_back(
                static_cast<std::int16_t>(std::floor(32767.0 * x)));
        }
    }
    return samples;
}

namespace detail {
inline void put_u16(std::string& s, std::uint16_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
}
inline void put_u32(std::string& s, std::uint32_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 24) & 0xff));
}
} // namespace detail

// Serializes samples as a mono 16-bit little-endian PCM RIFF/WAVE stream.
inline std::string wav_bytes(const std::vector<std::int16_t>& samples,
                             int sample_rate) {
    const std::uint32_t data_size =
        static_cast<std::uint32_t>(samples.size() * 2);
    std::string out;
    out.reserve(44 + data_size);
    out += "RIFF";
    detail::put_u32(out, 36 + data_size);
    out += "WAVE";
    out += "fmt ";
    detail::put_u32(out, 16);
    detail::put_u16(out, 1); // PCM
    detail::put_u16(out, 1); // mono
    detail::put_u32(out, static_cast<std::uint32_t>(sample_rate));
    detail::put_u32(out, static_cast<std::uint32_t>(sample_rate * 2));
    detail::put_u16(out, 2);  // block align
    detail::put_u16(out, 16); // bits per sample
    out += "data";
    detail::put_u32(out, data_size);
    for (std::int16_t s : samples)
        detail::put_u16(out, static_cast<std::uint16_t>(s));
    return out;
}

inline void render_wav(const TimedPiece& piece, const std::string& path,
                       const Config& cfg, const RenderOptions& opts = {}) {
    auto samples = render_samples(piece, cfg, opts);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("render: cannot open \"" + path + "\" for writing");
    const std::string bytes = wav_bytes(samples, cfg.sample_rate);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("render: write to \"" + path + "\" failed");
}

} // namespace harmonium
