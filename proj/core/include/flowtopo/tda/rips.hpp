#pragma once

#include <optional>
#include <vector>

#include "flowtopo/tda/takens.hpp"
#include "flowtopo/types.hpp"

namespace flowtopo::tda {

// Vietoris-Rips persistence over the Euclidean metric, exact on the given
// cloud (no approximation).
//
// H0: one bar (0, length) per minimum-spanning-forest edge (Kruskal over
// the full edge list, ties by lexicographic vertex pair) plus the
// essential bar (0, +inf). Zero-length edges from duplicate points are
// kept as (0, 0) bars.
//
// H1 (max_dim >= 1): persistent homology of the flag complex up to
// `threshold`. Without an explicit threshold the enclosing radius
// min_i max_j d(i, j) is used; beyond it the complex is a cone, so every
// 1-cycle is dead and no positive pair is lost. Zero-persistence pairs
// are not reported. Column reduction runs over triangle columns streamed
// in filtration order (grouped by maximal edge), with pivots claimed by
// the earliest column; the resulting diagram equals full boundary-matrix
// reduction.
//
// Returns the H0 diagram followed by the H1 diagram (present only when
// max_dim >= 1), both in canonical form with the given source tag.
std::vector<PersistenceDiagram> rips_persistence(
    const PointCloud& cloud, int max_dim,
    std::optional<double> threshold = std::nullopt,
    DiagramSource source = DiagramSource::RipsAirflow);

// min_i max_j d(i, j) of the cloud; the H1 auto-threshold.
double enclosing_radius(const PointCloud& cloud);

} // namespace flowtopo::tda
