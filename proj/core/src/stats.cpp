#include "flowtopo/util/stats.hpp"

#include <algorithm>
#include <cmath>

#include "flowtopo/errors.hpp"

namespace flowtopo {

double percentile(std::span<const double> values, double p) {
    if (values.empty()) throw Error("percentile of empty range");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() == 1) return sorted.front();
    p = std::clamp(p, 0.0, 1.0);
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double median(std::span<const double> values) { return percentile(values, 0.5); }

double interquartile_range(std::span<const double> values) {
    return percentile(values, 0.75) - percentile(values, 0.25);
}

double mean(std::span<const double> values) {
    if (values.empty()) throw Error("mean of empty range");
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double stddev_population(std::span<const double> values) {
    const double mu = mean(values);
    double acc = 0.0;
    for (const double v : values) acc += (v - mu) * (v - mu);
    return std::sqrt(acc / static_cast<double>(values.size()));
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out;
    out.reserve(count);
    if (count == 0) return out;
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(lo + step * static_cast<double>(i));
    out.back() = hi;
    return out;
}

} // namespace flowtopo
