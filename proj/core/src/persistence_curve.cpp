#include "flowtopo/curves/persistence_curve.hpp"

#include <algorithm>
#include <cmath>

namespace flowtopo::curves {

double PersistenceCurve::value_at(double x) const {
    if (is_zero()) return 0.0;
    if (x < breakpoints.front() || x >= breakpoints.back()) return 0.0;
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    const auto idx = static_cast<std::size_t>(it - breakpoints.begin());
    return values[idx - 1];
}

PersistenceCurve PersistenceCurve::scaled(double factor) const {
    PersistenceCurve out;
    out.breakpoints.reserve(breakpoints.size());
    for (const double b : breakpoints) out.breakpoints.push_back(b * factor);
    out.values = values;
    return out;
}

double entropy_weight(double birth, double death, double total_lifespan) {
    const double lifespan = death - birth;
    if (lifespan <= 0.0 || total_lifespan <= 0.0) return 0.0;
    const double ratio = lifespan / total_lifespan;
    // ratio == 1 gives log(1) == 0 exactly; single-bar diagrams vanish.
    return -ratio * std::log(ratio);
}

double total_lifespan(const PersistenceDiagram& diagram) {
    double total = 0.0;
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite()) continue;
        total += static_cast<double>(bar.multiplicity) * bar.lifespan();
    }
    return total;
}

PersistenceCurve entropy_curve(const PersistenceDiagram& diagram) {
    const double lifespan_sum = total_lifespan(diagram);
    struct Edge {
        double x;
        double delta;
    };
    std::vector<Edge> edges;
    edges.reserve(diagram.bars.size() * 2);
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite() || bar.death <= bar.birth) continue;
        const double w = static_cast<double>(bar.multiplicity) *
                         entropy_weight(bar.birth, bar.death, lifespan_sum);
        if (w == 0.0) continue; // single-bar diagrams carry no entropy
        edges.push_back({bar.birth, w});
        edges.push_back({bar.death, -w});
    }
    if (edges.empty()) return {}; // ZeroCurve marker

    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.x < b.x; });

    PersistenceCurve out;
    double level = 0.0;
    std::size_t i = 0;
    while (i < edges.size()) {
        const double x = edges[i].x;
        while (i < edges.size() && edges[i].x == x) {
            level += edges[i].delta;
            ++i;
        }
        out.breakpoints.push_back(x);
        if (i < edges.size()) {
            // cancellation dust in gaps between disjoint bars snaps to zero
            out.values.push_back(std::abs(level) < 1e-15 ? 0.0 : level);
        }
    }
    return out;
}

} // namespace flowtopo::curves
