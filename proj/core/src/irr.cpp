#include "flowtopo/preprocess/irr.hpp"

#include <algorithm>
#include <cmath>

#include "flowtopo/errors.hpp"

namespace flowtopo::preprocess {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size() || x_.empty())
        throw Error("MonotoneCubic: bad knot arrays");
    for (std::size_t i = 1; i < x_.size(); ++i)
        if (x_[i] <= x_[i - 1]) throw Error("MonotoneCubic: knots not increasing");

    const std::size_t n = x_.size();
    slope_.assign(n, 0.0);
    if (n == 1) return;

    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

    slope_[0] = secant.front();
    slope_[n - 1] = secant.back();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (secant[i - 1] * secant[i] <= 0.0)
            slope_[i] = 0.0; // local extremum stays flat
        else
            slope_[i] = 0.5 * (secant[i - 1] + secant[i]);
    }

    // Fritsch-Carlson limiting keeps each piece monotone.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (secant[i] == 0.0) {
            slope_[i] = 0.0;
            slope_[i + 1] = 0.0;
            continue;
        }
        double alpha = slope_[i] / secant[i];
        double beta = slope_[i + 1] / secant[i];
        if (alpha < 0.0) {
            slope_[i] = 0.0;
            alpha = 0.0;
        }
        if (beta < 0.0) {
            slope_[i + 1] = 0.0;
            beta = 0.0;
        }
        const double norm_sq = alpha * alpha + beta * beta;
        if (norm_sq > 9.0) {
            const double tau = 3.0 / std::sqrt(norm_sq);
            slope_[i] = tau * alpha * secant[i];
            slope_[i + 1] = tau * beta * secant[i];
        }
    }
}

double MonotoneCubic::operator()(double t) const {
    if (t <= x_.front()) return y_.front();
    if (t >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), t);
    const auto i = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double u = (t - x_[i]) / h;
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    const double h10 = u3 - 2.0 * u2 + u;
    const double h01 = -2.0 * u3 + 3.0 * u2;
    const double h11 = u3 - u2;
    return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] +
           h11 * h * slope_[i + 1];
}

IrrSignal irr(const BreathSequence& breaths, double duration_s) {
    if (breaths.onsets_s.size() < 2)
        throw EmptyBreathsError("irr: need at least 2 onsets");
    if (duration_s <= 0.0) throw Error("irr: duration must be positive");

    // one knot per cycle at the cycle-start onset
    std::vector<double> knot_t(breaths.onsets_s.begin(),
                               breaths.onsets_s.end() - 1);
    std::vector<double> knot_v;
    knot_v.reserve(breaths.width_s.size());
    for (const double w : breaths.width_s) knot_v.push_back(60.0 / w);

    const MonotoneCubic spline(std::move(knot_t), std::move(knot_v));

    IrrSignal out;
    const auto count =
        static_cast<std::size_t>(std::ceil(duration_s * kIrrRateHz));
    out.samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.samples.push_back(spline(static_cast<double>(k) / kIrrRateHz));
    return out;
}

} // namespace flowtopo::preprocess
