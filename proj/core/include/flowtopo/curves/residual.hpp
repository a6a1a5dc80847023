#pragma once

#include <span>
#include <vector>

#include "flowtopo/curves/coefficients.hpp"
#include "flowtopo/curves/persistence_curve.hpp"

namespace flowtopo::curves {

inline constexpr std::size_t kResidualGridPoints = 1000;

// Plain sum of squared differences between the exact step curve and the
// approximation samples, evaluated on the sample grid. No normalization.
double residual(const PersistenceCurve& curve, std::span<const double> grid,
                std::span<const double> approx_samples);

// Residual of one coefficient vector against its source curve on the
// standard 1000-point grid over the approximation domain. HEPC compares
// on the scaled axis (curve.scaled(coeffs.scale)).
double approximation_residual(const PersistenceCurve& curve,
                              const CoefficientVector& coeffs,
                              std::size_t grid_points = kResidualGridPoints);

} // namespace flowtopo::curves
