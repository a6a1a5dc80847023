#include "flowtopo/ingest/sqi.hpp"

#include <cmath>
#include <vector>

#include "flowtopo/errors.hpp"
#include "flowtopo/preprocess/filter.hpp"

namespace flowtopo::ingest {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

} // namespace

double sqi(std::span<const double> epoch_signal, double rate_hz) {
    if (rate_hz <= 0.0) throw Error("sqi: rate must be positive");
    const std::size_t n = epoch_signal.size();
    if (n < 4) return 0.0;
    const double duration = static_cast<double>(n) / rate_hz;

    const std::vector<double> x = preprocess::linear_detrend(epoch_signal);

    // DFT bins k cover f_k = k / duration; only the analysis band is needed
    const auto bin_of = [&](double f) { return f * duration; };
    const auto lo_bin = static_cast<std::size_t>(std::ceil(bin_of(kSqiTotalBandLowHz)));
    auto hi_bin = static_cast<std::size_t>(std::floor(bin_of(kSqiTotalBandHighHz)));
    hi_bin = std::min(hi_bin, n / 2);
    if (hi_bin < lo_bin || lo_bin == 0) return 0.0;

    std::vector<double> power(hi_bin + 1, 0.0);
    for (std::size_t k = lo_bin; k <= hi_bin; ++k) {
        double re = 0.0, im = 0.0;
        const double w = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        // incremental rotation avoids n sin/cos calls per bin
        const double cs = std::cos(w), sn = std::sin(w);
        double cr = 1.0, ci = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            re += x[t] * cr;
            im -= x[t] * ci;
            const double next_cr = cr * cs - ci * sn;
            ci = cr * sn + ci * cs;
            cr = next_cr;
        }
        power[k] = re * re + im * im;
    }

    double total = 0.0;
    for (std::size_t k = lo_bin; k <= hi_bin; ++k) total += power[k];
    if (total <= 0.0 || !std::isfinite(total)) return 0.0;

    // peak search restricted to the respiratory band
    const auto peak_lo = static_cast<std::size_t>(std::ceil(bin_of(kSqiPeakBandLowHz)));
    const auto peak_hi = std::min(
        static_cast<std::size_t>(std::floor(bin_of(kSqiPeakBandHighHz))), hi_bin);
    if (peak_hi < peak_lo) return 0.0;
    std::size_t peak = peak_lo;
    for (std::size_t k = peak_lo; k <= peak_hi; ++k)
        if (power[k] > power[peak]) peak = k;

    const double peak_f = static_cast<double>(peak) / duration;
    const auto win_lo = std::max(
        lo_bin, static_cast<std::size_t>(std::ceil(bin_of(peak_f - kSqiPeakHalfWidthHz))));
    const auto win_hi = std::min(
        hi_bin, static_cast<std::size_t>(std::floor(bin_of(peak_f + kSqiPeakHalfWidthHz))));
    double in_window = 0.0;
    for (std::size_t k = win_lo; k <= win_hi; ++k) in_window += power[k];

    return std::min(1.0, in_window / total);
}

} // namespace flowtopo::ingest
