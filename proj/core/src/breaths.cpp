#include "flowtopo/preprocess/breaths.hpp"

#include <algorithm>
#include <cmath>

#include "flowtopo/errors.hpp"
#include "flowtopo/util/stats.hpp"

namespace flowtopo::preprocess {

BreathSequence detect_breaths(std::span<const double> signal, double rate_hz) {
    if (rate_hz <= 0.0) throw Error("detect_breaths: rate must be positive");
    const std::size_t n = signal.size();
    BreathSequence out;
    if (n < 2) throw EmptyBreathsError("detect_breaths: signal too short");

    const double band = kBreathHysteresisIqrFraction *
                        interquartile_range(std::vector<double>(signal.begin(), signal.end()));

    std::vector<std::size_t> onsets;
    bool armed = false;
    std::ptrdiff_t pending = -1; // latest upward zero-crossing since arming
    double last_onset_t = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = signal[i];
        if (!armed) {
            if (x <= -band) armed = true;
            continue;
        }
        if (i > 0 && signal[i - 1] < 0.0 && x >= 0.0)
            pending = static_cast<std::ptrdiff_t>(i);
        if (x >= band && pending >= 0) {
            const double t = static_cast<double>(pending) / rate_hz;
            if (t - last_onset_t >= kBreathRefractorySeconds) {
                onsets.push_back(static_cast<std::size_t>(pending));
                last_onset_t = t;
            }
            armed = false;
            pending = -1;
        }
    }

    if (onsets.size() < 2)
        throw EmptyBreathsError("detect_breaths: fewer than 2 onsets");

    out.onsets_s.reserve(onsets.size());
    for (const std::size_t i : onsets)
        out.onsets_s.push_back(static_cast<double>(i) / rate_hz);

    const std::size_t cycles = onsets.size() - 1;
    out.peaks_s.reserve(cycles);
    out.troughs_s.reserve(cycles);
    out.amplitude.reserve(cycles);
    out.width_s.reserve(cycles);
    out.peak_value.reserve(cycles);
    out.trough_value.reserve(cycles);
    for (std::size_t c = 0; c < cycles; ++c) {
        const std::size_t begin = onsets[c];
        const std::size_t end = onsets[c + 1]; // cycle = [begin, end)
        std::size_t peak_i = begin, trough_i = begin;
        for (std::size_t i = begin; i < end; ++i) {
            if (signal[i] > signal[peak_i]) peak_i = i;
            if (signal[i] < signal[trough_i]) trough_i = i;
        }
        out.peaks_s.push_back(static_cast<double>(peak_i) / rate_hz);
        out.troughs_s.push_back(static_cast<double>(trough_i) / rate_hz);
        out.peak_value.push_back(signal[peak_i]);
        out.trough_value.push_back(signal[trough_i]);
        out.amplitude.push_back(signal[peak_i] - signal[trough_i]);
        out.width_s.push_back(out.onsets_s[c + 1] - out.onsets_s[c]);
    }
    return out;
}

} // namespace flowtopo::preprocess
