#include "flowtopo/tda/maxmin.hpp"

#include <limits>

#include "flowtopo/errors.hpp"
#include "flowtopo/util/rng.hpp"

namespace flowtopo::tda {

PointCloud maxmin_subsample(const PointCloud& cloud, std::size_t k,
                            std::uint64_t seed) {
    const std::size_t n = cloud.size();
    if (k > n) throw Error("maxmin_subsample: k exceeds cloud size");

    PointCloud out;
    out.dim = cloud.dim;
    out.tau_samples = cloud.tau_samples;
    if (k == 0) return out;

    SplitRng rng(seed);
    std::size_t current = static_cast<std::size_t>(rng.split("maxmin-first").next_below(n));

    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    chosen.push_back(current);

    std::vector<bool> taken(n, false);
    taken[current] = true;
    std::vector<double> min_sq(n, std::numeric_limits<double>::infinity());
    for (std::size_t round = 1; round < k; ++round) {
        std::size_t best = n;
        double best_sq = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = squared_distance(cloud, current, i);
            if (d < min_sq[i]) min_sq[i] = d;
            // ties (duplicate points) go to the lowest unchosen index
            if (!taken[i] && min_sq[i] > best_sq) {
                best_sq = min_sq[i];
                best = i;
            }
        }
        chosen.push_back(best);
        taken[best] = true;
        current = best;
    }

    out.coords.reserve(k * cloud.dim);
    for (const std::size_t idx : chosen) {
        const auto p = cloud.point(idx);
        out.coords.insert(out.coords.end(), p.begin(), p.end());
    }
    return out;
}

} // namespace flowtopo::tda
