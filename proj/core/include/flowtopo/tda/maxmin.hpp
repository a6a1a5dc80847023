#pragma once

#include <cstdint>

#include "flowtopo/tda/takens.hpp"

namespace flowtopo::tda {

// Greedy farthest-point subset of size k. The first point is picked by a
// seeded deterministic rule; ties in the farthest-point search resolve to
// the lowest index, so the result is a pure function of (cloud, k, seed).
PointCloud maxmin_subsample(const PointCloud& cloud, std::size_t k,
                            std::uint64_t seed);

} // namespace flowtopo::tda
