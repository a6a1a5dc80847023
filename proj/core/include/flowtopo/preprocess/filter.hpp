#pragma once

#include <array>
#include <span>
#include <vector>

namespace flowtopo::preprocess {

// One direct-form-II-transposed second-order section.
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

// Low-pass Butterworth of even order as cascaded biquads, bilinear
// transform with prewarping. order must be 2 or 4.
std::vector<Biquad> butterworth_lowpass(int order, double cutoff_hz,
                                        double rate_hz);

// Squared magnitude response of the cascade at freq_hz (one pass).
double cascade_magnitude_sq(std::span<const Biquad> sections, double freq_hz,
                            double rate_hz);

// Subtract the least-squares line.
std::vector<double> linear_detrend(std::span<const double> signal);

// Zero-phase (forward-backward) application of the cascade with odd
// reflection padding at both ends.
std::vector<double> filtfilt(std::span<const Biquad> sections,
                             std::span<const double> signal, double rate_hz);

inline constexpr double kAirflowCutoffHz = 2.0;
inline constexpr int kAirflowFilterOrder = 4;

// Linear detrend followed by the 2 Hz low-pass applied forward-backward.
// Output length equals input length; breath timing is not shifted.
std::vector<double> detrend_lowpass(std::span<const double> signal,
                                    double rate_hz);

// Keep every (rate_hz / target_hz)-th sample; the ratio must be a positive
// integer. Intended for signals already low-passed below target_hz / 2.
std::vector<double> decimate(std::span<const double> signal, double rate_hz,
                             double target_hz);

} // namespace flowtopo::preprocess
