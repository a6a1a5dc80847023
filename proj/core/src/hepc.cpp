#include "flowtopo/curves/hepc.hpp"

#include <cmath>

#include "flowtopo/curves/persistence_curve.hpp"
#include "flowtopo/errors.hpp"
#include "flowtopo/util/stats.hpp"

namespace flowtopo::curves {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

// L2(R)-orthonormal Hermite function, same recurrence as hermite_function
// but seeded with pi^{-1/4} exp(-x^2/2) instead of the phi-weighted form.
std::vector<double> orthonormal_hermite_upto(unsigned n_max, double x) {
    std::vector<double> h(n_max + 1);
    h[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    if (n_max >= 1) h[1] = std::sqrt(2.0) * x * h[0];
    for (unsigned n = 1; n < n_max; ++n) {
        h[n + 1] = x * std::sqrt(2.0 / (n + 1)) * h[n] -
                   std::sqrt(static_cast<double>(n) / (n + 1)) * h[n - 1];
    }
    return h;
}

} // namespace

double hermite_function(unsigned n, double x) {
    return hermite_functions_upto(n, x)[n];
}

std::vector<double> hermite_functions_upto(unsigned n_max, double x) {
    if (n_max > kMaxHermiteOrder)
        throw OverflowGuardError("Hermite order " + std::to_string(n_max) +
                                 " beyond guarded range " +
                                 std::to_string(kMaxHermiteOrder));
    std::vector<double> h(n_max + 1);
    h[0] = std::pow(kPi, -0.25) * normal_pdf(x);
    if (n_max >= 1) h[1] = std::sqrt(2.0) * x * h[0];
    for (unsigned n = 1; n < n_max; ++n) {
        h[n + 1] = x * std::sqrt(2.0 / (n + 1)) * h[n] -
                   std::sqrt(static_cast<double>(n) / (n + 1)) * h[n - 1];
    }
    return h;
}

CoefficientVector hepc_coefficients(const PersistenceDiagram& diagram,
                                    std::size_t n_coeffs, double scale) {
    if (n_coeffs == 0) throw ConfigError("hepc_coefficients: n_coeffs must be >= 1");
    if (n_coeffs > kMaxHermiteOrder)
        throw OverflowGuardError("hepc_coefficients: order beyond guarded range");
    if (scale <= 0.0) throw ConfigError("hepc_coefficients: scale must be positive");

    CoefficientVector out;
    out.kind = ApproximationKind::HEPC;
    out.scale = scale;
    out.values.assign(n_coeffs, 0.0);

    struct ScaledBar {
        double birth, death, weight;
    };
    std::vector<ScaledBar> bars;
    bars.reserve(diagram.bars.size());
    // total lifespan accumulated from the scaled endpoints themselves, so
    // a single-bar diagram sees a ratio of exactly 1 and vanishes
    double scaled_total = 0.0;
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite()) continue;
        scaled_total += static_cast<double>(bar.multiplicity) *
                        (bar.death * scale - bar.birth * scale);
    }
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite() || bar.death <= bar.birth) continue;
        const double b = bar.birth * scale;
        const double d = bar.death * scale;
        // entropy weight on the scaled bars; equal to the unscaled weight
        // because l/L is invariant under common rescaling
        const double w = static_cast<double>(bar.multiplicity) *
                         entropy_weight(b, d, scaled_total);
        if (w == 0.0) continue;
        bars.push_back({b, d, w});
        if (!any) {
            lo = b;
            hi = d;
            any = true;
        } else {
            lo = std::min(lo, b);
            hi = std::max(hi, d);
        }
    }
    out.domain = {lo, hi};
    if (!any) return out; // empty / single-degenerate diagram -> zeros

    const double pi_quarter = std::pow(kPi, 0.25);
    double a0 = 0.0, a1 = 0.0;
    for (const ScaledBar& bar : bars) {
        a0 += bar.weight * (normal_cdf(bar.death) - normal_cdf(bar.birth));
        a1 += bar.weight * (normal_pdf(bar.birth) - normal_pdf(bar.death));
    }
    out.values[0] = std::sqrt(2.0) * pi_quarter * a0;
    if (n_coeffs >= 2) out.values[1] = 2.0 * pi_quarter * a1;
    if (n_coeffs <= 2) return out;

    // Precompute the orthonormal Hermite values at every endpoint once.
    const unsigned top = static_cast<unsigned>(n_coeffs) - 1;
    std::vector<std::vector<double>> at_birth(bars.size()), at_death(bars.size());
    for (std::size_t i = 0; i < bars.size(); ++i) {
        at_birth[i] = orthonormal_hermite_upto(top, bars[i].birth);
        at_death[i] = orthonormal_hermite_upto(top, bars[i].death);
    }
    for (unsigned n = 1; n + 1 <= top; ++n) {
        double jump = 0.0;
        for (std::size_t i = 0; i < bars.size(); ++i)
            jump += bars[i].weight * (at_birth[i][n] - at_death[i][n]);
        out.values[n + 1] =
            std::sqrt(2.0 / (n + 1)) * jump +
            std::sqrt(static_cast<double>(n) / (n + 1)) * out.values[n - 1];
    }
    return out;
}

std::vector<double> reconstruct_hepc(const CoefficientVector& coeffs,
                                     const Domain& domain,
                                     std::size_t grid_points) {
    if (coeffs.kind != ApproximationKind::HEPC)
        throw ConfigError("reconstruct_hepc: coefficient kind is not HEPC");
    if (coeffs.values.size() > kMaxHermiteOrder)
        throw OverflowGuardError("reconstruct_hepc: order beyond guarded range");

    const std::vector<double> grid = linspace(domain.d_min, domain.d_max, grid_points);
    std::vector<double> out(grid.size(), 0.0);
    if (coeffs.values.empty()) return out;
    const unsigned top = static_cast<unsigned>(coeffs.values.size()) - 1;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const std::vector<double> h = hermite_functions_upto(top, grid[g]);
        double acc = 0.0;
        for (std::size_t n = 0; n < coeffs.values.size(); ++n)
            acc += coeffs.values[n] * h[n];
        out[g] = acc;
    }
    return out;
}

} // namespace flowtopo::curves
