#pragma once

#include <span>
#include <vector>

namespace flowtopo::features {

struct ZNormStats {
    std::vector<double> mean;
    std::vector<double> stddev; // population convention; < threshold means pass-through
};

inline constexpr double kDegenerateStdThreshold = 1e-12;

// Fit per-column mean and population standard deviation on the training
// rows. Needs at least 2 rows.
ZNormStats znorm_fit(std::span<const std::vector<double>> train_rows);

// (x - mean) / std per column; columns whose fitted std is below the
// degenerate threshold are centered only. Never refits.
std::vector<std::vector<double>> znorm_apply(
    std::span<const std::vector<double>> rows, const ZNormStats& stats);

} // namespace flowtopo::features
