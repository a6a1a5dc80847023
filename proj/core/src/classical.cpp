#include "flowtopo/features/classical.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "flowtopo/errors.hpp"
#include "flowtopo/util/stats.hpp"

namespace flowtopo::features {

namespace {

// trapezoidal integral of max(sign * f, 0) over samples [begin, end]
double rectified_area(std::span<const double> signal, double rate_hz,
                      std::size_t begin, std::size_t end, double sign) {
    if (end <= begin) return 0.0;
    const double dt = 1.0 / rate_hz;
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        const double a = std::max(sign * signal[i], 0.0);
        const double b = std::max(sign * signal[i + 1], 0.0);
        acc += 0.5 * (a + b) * dt;
    }
    return acc;
}

} // namespace

ClassicalFeatures classical_features(std::span<const double> filtered,
                                     double rate_hz,
                                     const preprocess::BreathSequence& breaths) {
    const std::size_t cycles = breaths.cycle_count();
    if (cycles < 2)
        throw EmptyBreathsError("classical_features: need at least 2 cycles");

    std::vector<double> inhale_areas, exhale_areas;
    inhale_areas.reserve(cycles);
    exhale_areas.reserve(cycles);
    for (std::size_t c = 0; c < cycles; ++c) {
        const std::size_t last = filtered.size() - 1;
        const auto onset = std::min(
            static_cast<std::size_t>(std::llround(breaths.onsets_s[c] * rate_hz)), last);
        const auto peak = std::min(
            static_cast<std::size_t>(std::llround(breaths.peaks_s[c] * rate_hz)), last);
        const auto next = std::min(
            static_cast<std::size_t>(std::llround(breaths.onsets_s[c + 1] * rate_hz)),
            last);
        // inhalation ends where the positive lobe does: first drop below the
        // baseline after the peak (a pure sine then gives equal areas)
        std::size_t lobe_end = peak;
        while (lobe_end < next && filtered[lobe_end] >= 0.0) ++lobe_end;
        inhale_areas.push_back(rectified_area(filtered, rate_hz, onset, lobe_end, 1.0));
        exhale_areas.push_back(rectified_area(filtered, rate_hz, lobe_end, next, -1.0));
    }

    const double mai = median(inhale_areas);
    const double mae = median(exhale_areas);

    ClassicalFeatures out;
    out.values[0] = median(breaths.amplitude);
    out.values[1] = interquartile_range(breaths.amplitude);
    out.values[2] = median(breaths.width_s);
    out.values[3] = interquartile_range(breaths.width_s);
    out.values[4] = median(breaths.peak_value);
    out.values[5] = interquartile_range(breaths.peak_value);
    out.values[6] = median(breaths.trough_value);
    out.values[7] = interquartile_range(breaths.trough_value);
    out.values[8] = mai;
    out.values[9] = mae;
    if (mae == 0.0) {
        out.values[10] = kRatioSentinel;
        out.ratio_capped = true;
    } else {
        out.values[10] = mai / mae;
    }
    return out;
}

} // namespace flowtopo::features
