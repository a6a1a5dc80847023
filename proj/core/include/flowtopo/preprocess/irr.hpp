#pragma once

#include <span>
#include <vector>

#include "flowtopo/preprocess/breaths.hpp"

namespace flowtopo::preprocess {

inline constexpr double kIrrRateHz = 4.0;

// Instantaneous respiratory rate in breaths per minute, sampled at 4 Hz.
struct IrrSignal {
    std::vector<double> samples;
    double rate_hz = kIrrRateHz;
};

// Monotone cubic interpolant (piecewise Hermite, Fritsch-Carlson slope
// limiting) through knots (x, y); never overshoots adjacent knot values.
// Constant extrapolation outside [x.front(), x.back()].
struct MonotoneCubic {
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;

private:
    std::vector<double> x_, y_, slope_;
};

// IRR from detected breaths: knots at cycle-start onset times with value
// 60 / width_s[i], interpolated by MonotoneCubic and sampled on the 4 Hz
// grid t = k/4, k = 0 .. ceil(duration_s * 4) - 1.
IrrSignal irr(const BreathSequence& breaths, double duration_s);

} // namespace flowtopo::preprocess
