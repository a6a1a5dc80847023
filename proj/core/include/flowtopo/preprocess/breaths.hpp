#pragma once

#include <span>
#include <vector>

namespace flowtopo::preprocess {

// Per-cycle breath markers. onsets_s has one more entry than the
// per-cycle arrays; width_s[i] = onsets_s[i+1] - onsets_s[i].
struct BreathSequence {
    std::vector<double> onsets_s; // strictly increasing
    std::vector<double> peaks_s;
    std::vector<double> troughs_s;
    std::vector<double> amplitude;
    std::vector<double> width_s;
    std::vector<double> peak_value;
    std::vector<double> trough_value;

    std::size_t cycle_count() const { return width_s.size(); }
};

// Breath onsets of a detrended, low-passed signal: upward zero-crossings
// confirmed by a hysteresis band of +/- 0.1 IQR (the crossing counts once
// the signal has come from below the band and reaches above it), with a
// 1.0 s refractory period. Each cycle records the extremum values/times
// between consecutive onsets. Throws EmptyBreathsError when fewer than
// two onsets are found.
BreathSequence detect_breaths(std::span<const double> signal, double rate_hz);

inline constexpr double kBreathRefractorySeconds = 1.0;
inline constexpr double kBreathHysteresisIqrFraction = 0.1;

} // namespace flowtopo::preprocess
