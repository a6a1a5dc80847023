#include "flowtopo/preprocess/filter.hpp"

#include <cmath>
#include <complex>

#include "flowtopo/errors.hpp"

namespace flowtopo::preprocess {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<double> apply_forward(std::span<const Biquad> sections,
                                  std::vector<double> x) {
    for (const Biquad& s : sections) {
        double z1 = 0.0, z2 = 0.0;
        for (double& v : x) {
            const double in = v;
            const double out = s.b0 * in + z1;
            z1 = s.b1 * in - s.a1 * out + z2;
            z2 = s.b2 * in - s.a2 * out;
            v = out;
        }
    }
    return x;
}

} // namespace

std::vector<Biquad> butterworth_lowpass(int order, double cutoff_hz,
                                        double rate_hz) {
    if (order != 2 && order != 4)
        throw ConfigError("butterworth_lowpass: order must be 2 or 4");
    if (cutoff_hz <= 0.0 || cutoff_hz >= rate_hz / 2.0)
        throw ConfigError("butterworth_lowpass: cutoff outside (0, rate/2)");

    // Analog prototype pole-pair quality factors.
    std::vector<double> q;
    if (order == 2) {
        q = {1.0 / (2.0 * std::cos(kPi / 4.0))};
    } else {
        q = {1.0 / (2.0 * std::cos(kPi / 8.0)), 1.0 / (2.0 * std::cos(3.0 * kPi / 8.0))};
    }

    const double warp = std::tan(kPi * cutoff_hz / rate_hz);
    std::vector<Biquad> sections;
    sections.reserve(q.size());
    for (const double qi : q) {
        const double k2 = warp * warp;
        const double norm = k2 + warp / qi + 1.0;
        Biquad s;
        s.b0 = k2 / norm;
        s.b1 = 2.0 * s.b0;
        s.b2 = s.b0;
        s.a1 = 2.0 * (k2 - 1.0) / norm;
        s.a2 = (k2 - warp / qi + 1.0) / norm;
        sections.push_back(s);
    }
    return sections;
}

double cascade_magnitude_sq(std::span<const Biquad> sections, double freq_hz,
                            double rate_hz) {
    const double w = 2.0 * kPi * freq_hz / rate_hz;
    const std::complex<double> z = std::polar(1.0, -w);
    std::complex<double> h(1.0, 0.0);
    for (const Biquad& s : sections) {
        const std::complex<double> num = s.b0 + s.b1 * z + s.b2 * z * z;
        const std::complex<double> den = 1.0 + s.a1 * z + s.a2 * z * z;
        h *= num / den;
    }
    return std::norm(h);
}

std::vector<double> linear_detrend(std::span<const double> signal) {
    const std::size_t n = signal.size();
    std::vector<double> out(signal.begin(), signal.end());
    if (n < 2) {
        if (n == 1) out[0] = 0.0;
        return out;
    }
    // least-squares fit of v = a + b t with t = 0..n-1
    const double tn = static_cast<double>(n);
    const double t_mean = (tn - 1.0) / 2.0;
    double v_mean = 0.0;
    for (const double v : signal) v_mean += v;
    v_mean /= tn;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = static_cast<double>(i) - t_mean;
        num += dt * (signal[i] - v_mean);
        den += dt * dt;
    }
    const double slope = den > 0.0 ? num / den : 0.0;
    const double intercept = v_mean - slope * t_mean;
    for (std::size_t i = 0; i < n; ++i)
        out[i] = signal[i] - (intercept + slope * static_cast<double>(i));
    return out;
}

std::vector<double> filtfilt(std::span<const Biquad> sections,
                             std::span<const double> signal, double rate_hz) {
    const std::size_t n = signal.size();
    if (n < 2) return {signal.begin(), signal.end()};

    // odd reflection suppresses edge transients; 3 s covers the 2 Hz
    // fourth-order impulse tail comfortably
    const std::size_t pad =
        std::min(n - 1, static_cast<std::size_t>(std::llround(3.0 * rate_hz)));

    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (std::size_t i = 0; i < pad; ++i)
        ext.push_back(2.0 * signal[0] - signal[pad - i]);
    ext.insert(ext.end(), signal.begin(), signal.end());
    for (std::size_t i = 0; i < pad; ++i)
        ext.push_back(2.0 * signal[n - 1] - signal[n - 2 - i]);

    ext = apply_forward(sections, std::move(ext));
    std::reverse(ext.begin(), ext.end());
    ext = apply_forward(sections, std::move(ext));
    std::reverse(ext.begin(), ext.end());

    return {ext.begin() + static_cast<std::ptrdiff_t>(pad),
            ext.begin() + static_cast<std::ptrdiff_t>(pad + n)};
}

std::vector<double> detrend_lowpass(std::span<const double> signal,
                                    double rate_hz) {
    if (signal.size() < 8)
        throw Error("detrend_lowpass: need at least 8 samples");
    if (rate_hz <= 0.0) throw Error("detrend_lowpass: rate must be positive");
    const std::vector<double> detrended = linear_detrend(signal);
    const std::vector<Biquad> sections =
        butterworth_lowpass(kAirflowFilterOrder, kAirflowCutoffHz, rate_hz);
    return filtfilt(sections, detrended, rate_hz);
}

std::vector<double> decimate(std::span<const double> signal, double rate_hz,
                             double target_hz) {
    if (target_hz <= 0.0 || rate_hz <= 0.0)
        throw ConfigError("decimate: rates must be positive");
    const double ratio = rate_hz / target_hz;
    const auto factor = static_cast<std::size_t>(std::llround(ratio));
    if (factor < 1 || std::abs(ratio - static_cast<double>(factor)) > 1e-9)
        throw ConfigError("decimate: rate must be an integer multiple of target");
    std::vector<double> out;
    out.reserve(signal.size() / factor + 1);
    for (std::size_t i = 0; i < signal.size(); i += factor)
        out.push_back(signal[i]);
    return out;
}

} // namespace flowtopo::preprocess
