#include "flowtopo/curves/residual.hpp"

#include "flowtopo/curves/fapc.hpp"
#include "flowtopo/curves/hepc.hpp"
#include "flowtopo/errors.hpp"
#include "flowtopo/util/stats.hpp"

namespace flowtopo::curves {

double residual(const PersistenceCurve& curve, std::span<const double> grid,
                std::span<const double> approx_samples) {
    if (grid.size() != approx_samples.size())
        throw Error("residual: grid and samples differ in length");
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double diff = curve.value_at(grid[i]) - approx_samples[i];
        acc += diff * diff;
    }
    return acc;
}

double approximation_residual(const PersistenceCurve& curve,
                              const CoefficientVector& coeffs,
                              std::size_t grid_points) {
    if (coeffs.kind == ApproximationKind::HEPC) {
        const PersistenceCurve scaled = curve.scaled(coeffs.scale);
        const std::vector<double> grid =
            linspace(coeffs.domain.d_min, coeffs.domain.d_max, grid_points);
        const std::vector<double> approx =
            reconstruct_hepc(coeffs, coeffs.domain, grid_points);
        return residual(scaled, grid, approx);
    }
    const std::vector<double> grid =
        linspace(coeffs.domain.d_min, coeffs.domain.d_max, grid_points);
    const std::vector<double> approx = reconstruct_fapc(coeffs, grid_points);
    return residual(curve, grid, approx);
}

} // namespace flowtopo::curves
