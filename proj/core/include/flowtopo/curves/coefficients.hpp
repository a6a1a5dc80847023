#pragma once

#include <complex>
#include <vector>

#include "flowtopo/types.hpp"

namespace flowtopo::curves {

enum class ApproximationKind : std::uint8_t { HEPC, AP_FAPC, SP_FAPC };

const char* to_string(ApproximationKind k);

// Approximation domain endpoints. For Fourier fits this is the basis
// period; for Hermite fits it is the scaled support used for evaluation.
struct Domain {
    double d_min = 0.0;
    double d_max = 0.0;

    double width() const { return d_max - d_min; }
    bool operator==(const Domain&) const = default;
};

// Fixed-length summary of one persistence curve.
//
// HEPC stores n real Hermite coefficients. Fourier kinds store n complex
// coefficients flattened as [Re_0..Re_{n-1}, Im_0..Im_{n-1}] (Im_0 is
// always 0), i.e. 2n reals.
struct CoefficientVector {
    ApproximationKind kind = ApproximationKind::HEPC;
    std::vector<double> values;
    Domain domain;
    double scale = 1.0; // Hermite pre-scaling constant; 1.0 for Fourier

    std::size_t order() const {
        return kind == ApproximationKind::HEPC ? values.size()
                                               : values.size() / 2;
    }

    std::complex<double> fourier_coeff(std::size_t n) const {
        const std::size_t half = values.size() / 2;
        return {values[n], values[half + n]};
    }
};

} // namespace flowtopo::curves
