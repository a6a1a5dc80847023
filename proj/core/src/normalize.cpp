#include "flowtopo/features/normalize.hpp"

#include <cmath>

#include "flowtopo/errors.hpp"

namespace flowtopo::features {

ZNormStats znorm_fit(std::span<const std::vector<double>> train_rows) {
    if (train_rows.size() < 2)
        throw Error("znorm_fit: need at least 2 training rows");
    const std::size_t cols = train_rows.front().size();
    for (const auto& row : train_rows)
        if (row.size() != cols) throw Error("znorm_fit: ragged rows");

    ZNormStats stats;
    stats.mean.assign(cols, 0.0);
    stats.stddev.assign(cols, 0.0);
    const double n = static_cast<double>(train_rows.size());
    for (const auto& row : train_rows)
        for (std::size_t c = 0; c < cols; ++c) stats.mean[c] += row[c];
    for (std::size_t c = 0; c < cols; ++c) stats.mean[c] /= n;
    for (const auto& row : train_rows)
        for (std::size_t c = 0; c < cols; ++c) {
            const double d = row[c] - stats.mean[c];
            stats.stddev[c] += d * d;
        }
    for (std::size_t c = 0; c < cols; ++c)
        stats.stddev[c] = std::sqrt(stats.stddev[c] / n);
    return stats;
}

std::vector<std::vector<double>> znorm_apply(
    std::span<const std::vector<double>> rows, const ZNormStats& stats) {
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != stats.mean.size())
            throw Error("znorm_apply: row width mismatch");
        std::vector<double> norm(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            const double centered = row[c] - stats.mean[c];
            norm[c] = stats.stddev[c] < kDegenerateStdThreshold
                          ? centered
                          : centered / stats.stddev[c];
        }
        out.push_back(std::move(norm));
    }
    return out;
}

} // namespace flowtopo::features
