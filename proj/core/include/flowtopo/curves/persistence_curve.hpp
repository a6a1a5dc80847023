#pragma once

#include <vector>

#include "flowtopo/types.hpp"

namespace flowtopo::curves {

// Piecewise-constant summary curve of a persistence diagram:
// value on [breakpoints[i], breakpoints[i+1]) is values[i], zero outside
// [breakpoints.front(), breakpoints.back()). An empty breakpoint list is
// the ZeroCurve marker (identically zero, empty domain).
struct PersistenceCurve {
    std::vector<double> breakpoints; // strictly increasing
    std::vector<double> values;      // size = breakpoints.size() - 1

    bool is_zero() const { return breakpoints.empty(); }

    // Step evaluation with half-open pieces; 0 outside the support.
    double value_at(double x) const;

    // Same curve on a rescaled axis (breakpoints * factor, values kept).
    PersistenceCurve scaled(double factor) const;

    double support_min() const { return breakpoints.front(); }
    double support_max() const { return breakpoints.back(); }
};

// Lifespan entropy weight of one bar: -(l/L) log(l/L) with l = death-birth.
// Exactly zero when l == 0 or l == L (single-bar diagrams vanish).
double entropy_weight(double birth, double death, double total_lifespan);

// Total lifespan L over finite bars (multiplicity-weighted). Infinite bars
// are excluded before any curve construction.
double total_lifespan(const PersistenceDiagram& diagram);

// Lifespan entropy persistence curve: sum over finite positive-length bars
// of entropy_weight * indicator([birth, death)). Returns the ZeroCurve
// marker when no such bar exists.
PersistenceCurve entropy_curve(const PersistenceDiagram& diagram);

} // namespace flowtopo::curves
