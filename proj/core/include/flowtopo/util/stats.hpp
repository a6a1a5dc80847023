#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace flowtopo {

// Percentile with linear interpolation between order statistics:
// h = (n-1)p, result = v[floor(h)] + frac(h) * (v[floor(h)+1] - v[floor(h)]).
// This convention is pinned; estimate_constants and the IQR features
// depend on it being stable.
double percentile(std::span<const double> values, double p);

double median(std::span<const double> values);

// 75th minus 25th percentile under the convention above.
double interquartile_range(std::span<const double> values);

double mean(std::span<const double> values);

// Population (divide by N) standard deviation.
double stddev_population(std::span<const double> values);

std::vector<double> linspace(double lo, double hi, std::size_t count);

} // namespace flowtopo
