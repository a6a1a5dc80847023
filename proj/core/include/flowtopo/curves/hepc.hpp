#pragma once

#include <vector>

#include "flowtopo/curves/coefficients.hpp"
#include "flowtopo/types.hpp"

namespace flowtopo::curves {

// Hermite function family.
//
// hermite_function(n, x) is h_n(x) = c_n F_n(x) phi(x) with
// c_n = (2^n n! sqrt(pi))^{-1/2}, F_n the physicists' Hermite polynomial
// and phi the standard normal density. The family orthonormal under the
// plain L2(R) inner product is sqrt(2*pi) * h_n; coefficient extraction
// below projects onto that orthonormal family, reconstruction sums the
// h_n themselves.
//
// Both are evaluated with the normalized three-term recurrence
//   h_{n+1}(x) = x sqrt(2/(n+1)) h_n(x) - sqrt(n/(n+1)) h_{n-1}(x),
// which never forms 2^n n! explicitly.
double hermite_function(unsigned n, double x);

// All orders 0..n_max at one point, cheapest way to evaluate partial sums.
std::vector<double> hermite_functions_upto(unsigned n_max, double x);

// Orders above this would be meaningless with double-precision factorial
// handling in the unnormalized definition; the guard is explicit.
inline constexpr unsigned kMaxHermiteOrder = 170;

// Hermite expansion coefficients of the lifespan entropy curve.
//
// Bars are multiplied by `scale` before evaluation (the entropy weights are
// scale-invariant, so this only moves the support into the range where
// low-order Hermite functions live). Coefficients follow the recursion
//   a_0 = sum sqrt(2) pi^{1/4} w [Phi(d) - Phi(b)]
//   a_1 = sum 2 pi^{1/4} w [phi(b) - phi(d)]
//   a_{n+1} = sqrt(2/(n+1)) sum w [H_n(b) - H_n(d)] + sqrt(n/(n+1)) a_{n-1}
// with w the entropy weight, Phi/phi the standard normal CDF/PDF and H_n
// the L2-orthonormal Hermite function. Empty or single-bar diagrams yield
// the zero vector.
CoefficientVector hepc_coefficients(const PersistenceDiagram& diagram,
                                    std::size_t n_coeffs, double scale);

// Partial-sum evaluation sum_n coeffs[n] * h_n(x) on a uniform grid of
// grid_points samples over `domain` (the scaled axis).
std::vector<double> reconstruct_hepc(const CoefficientVector& coeffs,
                                     const Domain& domain,
                                     std::size_t grid_points);

} // namespace flowtopo::curves
