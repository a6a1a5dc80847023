#pragma once

#include <optional>
#include <vector>

#include "flowtopo/curves/coefficients.hpp"
#include "flowtopo/types.hpp"

namespace flowtopo::curves {

// Support of the lifespan entropy curve: (min birth, max finite death)
// over bars with positive lifespan. Empty when no such bar exists (the
// ZeroCurve marker propagates).
std::optional<Domain> ap_domain(const PersistenceDiagram& diagram);

// Fourier coefficients of the lifespan entropy curve over `domain`, by the
// closed form (no sampling of the curve):
//   beta_0 = (2/A) sum w (d - b)
//   beta_n = (2/A) sum w (iA / 2 pi n) (e^{2 pi i b n / A} - e^{2 pi i d n / A})
// with A = d_max - d_min and w the entropy weight. Bars are intersected
// with [d_min, d_max] first; bars disjoint from the domain contribute
// nothing. The positive-exponent convention matches the reconstruction
// below (Im beta_n multiplies +sin).
//
// Output: 2*n_coeffs reals, real parts then imaginary parts.
CoefficientVector fapc_coefficients(const PersistenceDiagram& diagram,
                                    std::size_t n_coeffs, const Domain& domain,
                                    ApproximationKind kind = ApproximationKind::AP_FAPC);

// Real-form partial sum on a uniform grid of grid_points samples over the
// coefficient domain:
//   P(x) = beta_0/2 + sum_n [Re{beta_n} cos(2 pi n x / A) + Im{beta_n} sin(2 pi n x / A)]
std::vector<double> reconstruct_fapc(const CoefficientVector& coeffs,
                                     std::size_t grid_points);

} // namespace flowtopo::curves
