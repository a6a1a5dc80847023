#pragma once

#include <array>
#include <span>

#include "flowtopo/preprocess/breaths.hpp"

namespace flowtopo::features {

inline constexpr std::size_t kClassicalFeatureCount = 11;
inline constexpr double kRatioSentinel = 1e6;

struct ClassicalFeatures {
    // order: median amplitude, IQR amplitude, median width, IQR width,
    // median peak, IQR peak, median trough, IQR trough, MAI, MAE, MAI/MAE
    std::array<double, kClassicalFeatureCount> values{};
    bool ratio_capped = false; // MAE was zero, ratio reported as sentinel
};

// Breathing-cycle statistics of one 180 s window. `filtered` is the
// detrended, low-passed airflow the breaths were detected on; the zero
// line of that signal is the baseline for the inhalation/exhalation
// areas (MAI/MAE). Inhalation spans the positive lobe (onset until the
// signal drops below baseline after the peak), exhalation the remainder
// of the cycle; areas are trapezoidal integrals of the positive/negative
// part, so a symmetric waveform scores MAI/MAE = 1. Requires at least
// 2 cycles.
ClassicalFeatures classical_features(std::span<const double> filtered,
                                     double rate_hz,
                                     const preprocess::BreathSequence& breaths);

} // namespace flowtopo::features
