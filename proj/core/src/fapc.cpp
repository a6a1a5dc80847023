#include "flowtopo/curves/fapc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "flowtopo/curves/persistence_curve.hpp"
#include "flowtopo/errors.hpp"
#include "flowtopo/util/stats.hpp"

namespace flowtopo::curves {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

} // namespace

std::optional<Domain> ap_domain(const PersistenceDiagram& diagram) {
    bool any = false;
    Domain dom;
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite() || bar.death <= bar.birth) continue;
        if (!any) {
            dom = {bar.birth, bar.death};
            any = true;
        } else {
            dom.d_min = std::min(dom.d_min, bar.birth);
            dom.d_max = std::max(dom.d_max, bar.death);
        }
    }
    if (!any) return std::nullopt;
    return dom;
}

CoefficientVector fapc_coefficients(const PersistenceDiagram& diagram,
                                    std::size_t n_coeffs, const Domain& domain,
                                    ApproximationKind kind) {
    if (n_coeffs == 0) throw ConfigError("fapc_coefficients: n_coeffs must be >= 1");
    if (kind == ApproximationKind::HEPC)
        throw ConfigError("fapc_coefficients: kind must be a Fourier kind");
    const double period = domain.width();
    if (period <= 0.0) throw DomainError("fapc_coefficients: d_max must exceed d_min");

    CoefficientVector out;
    out.kind = kind;
    out.domain = domain;
    out.scale = 1.0;
    out.values.assign(2 * n_coeffs, 0.0);

    const double lifespan_sum = total_lifespan(diagram);
    std::vector<std::complex<double>> beta(n_coeffs, {0.0, 0.0});
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite() || bar.death <= bar.birth) continue;
        // clip to the basis interval; the weight stays that of the full bar
        const double lo = std::max(bar.birth, domain.d_min);
        const double hi = std::min(bar.death, domain.d_max);
        if (hi <= lo) continue;
        const double w = static_cast<double>(bar.multiplicity) *
                         entropy_weight(bar.birth, bar.death, lifespan_sum);
        beta[0] += (2.0 / period) * w * (hi - lo);
        for (std::size_t n = 1; n < n_coeffs; ++n) {
            const double freq = kTwoPi * static_cast<double>(n) / period;
            const std::complex<double> phase_lo = std::polar(1.0, freq * lo);
            const std::complex<double> phase_hi = std::polar(1.0, freq * hi);
            const std::complex<double> factor(0.0, period / (kTwoPi * static_cast<double>(n)));
            beta[n] += (2.0 / period) * w * factor * (phase_lo - phase_hi);
        }
    }
    for (std::size_t n = 0; n < n_coeffs; ++n) {
        out.values[n] = beta[n].real();
        out.values[n_coeffs + n] = beta[n].imag();
    }
    out.values[n_coeffs] = 0.0; // Im beta_0 is identically zero
    return out;
}

std::vector<double> reconstruct_fapc(const CoefficientVector& coeffs,
                                     std::size_t grid_points) {
    if (coeffs.kind == ApproximationKind::HEPC)
        throw ConfigError("reconstruct_fapc: coefficient kind is not a Fourier kind");
    const double period = coeffs.domain.width();
    if (period <= 0.0) throw DomainError("reconstruct_fapc: empty domain");

    const std::size_t order = coeffs.order();
    const std::vector<double> grid =
        linspace(coeffs.domain.d_min, coeffs.domain.d_max, grid_points);
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double acc = coeffs.values.empty() ? 0.0 : coeffs.values[0] / 2.0;
        for (std::size_t n = 1; n < order; ++n) {
            const double angle = kTwoPi * static_cast<double>(n) * grid[g] / period;
            const std::complex<double> beta = coeffs.fourier_coeff(n);
            acc += beta.real() * std::cos(angle) + beta.imag() * std::sin(angle);
        }
        out[g] = acc;
    }
    return out;
}

} // namespace flowtopo::curves
