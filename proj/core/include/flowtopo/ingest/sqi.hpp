#pragma once

#include <span>

namespace flowtopo::ingest {

// Signal quality index of one 30 s epoch, in [0, 1].
//
// Periodogram of the linearly detrended epoch; the peak bin is searched in
// the respiratory band [0.1, 1.2] Hz and the index is the power within
// +/- 0.05 Hz of that peak divided by the total power in [0.05, 2.0] Hz.
// Scale-invariant by construction; signals with no in-band power
// (constant, all zero) score 0.
double sqi(std::span<const double> epoch_signal, double rate_hz);

inline constexpr double kSqiPeakBandLowHz = 0.1;
inline constexpr double kSqiPeakBandHighHz = 1.2;
inline constexpr double kSqiPeakHalfWidthHz = 0.05;
inline constexpr double kSqiTotalBandLowHz = 0.05;
inline constexpr double kSqiTotalBandHighHz = 2.0;

} // namespace flowtopo::ingest
