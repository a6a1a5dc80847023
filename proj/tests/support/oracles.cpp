#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "flowtopo/util/rng.hpp"

namespace flowtopo::testsupport {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// 10-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGlNode[10] = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
    -0.4333953941292472, -0.1488743389816312, 0.1488743389816312,
    0.4333953941292472,  0.6794095682990244,  0.8650633666889845,
    0.9739065285171717};
constexpr double kGlWeight[10] = {
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820,
    0.2692667193099963, 0.2955242247147529, 0.2955242247147529,
    0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
    0.0666713443086881};

} // namespace

// --- sublevel brute force -----------------------------------------------

std::vector<Bar> sublevel_bruteforce(std::span<const double> series) {
    std::vector<Bar> bars;
    const std::size_t n = series.size();
    if (n == 0) return bars;

    std::vector<double> thresholds(series.begin(), series.end());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                     thresholds.end());

    // component identity = (birth value, index of that minimum); recomputed
    // from scratch at every threshold
    struct Component {
        std::size_t lo, hi; // inclusive run
        double birth_value;
        std::size_t birth_index;
    };
    const auto components_at = [&](double t) {
        std::vector<Component> comps;
        std::size_t i = 0;
        while (i < n) {
            if (series[i] > t) {
                ++i;
                continue;
            }
            std::size_t j = i;
            Component c{i, i, series[i], i};
            while (j + 1 < n && series[j + 1] <= t) {
                ++j;
                if (series[j] < c.birth_value) {
                    c.birth_value = series[j];
                    c.birth_index = j;
                }
            }
            c.hi = j;
            comps.push_back(c);
            i = j + 1;
        }
        return comps;
    };

    std::vector<Component> previous;
    for (const double t : thresholds) {
        std::vector<Component> current = components_at(t);
        for (const Component& now : current) {
            // old components swallowed by this run; all but the elder die
            std::vector<const Component*> inside;
            for (const Component& old : previous)
                if (old.lo >= now.lo && old.hi <= now.hi) inside.push_back(&old);
            if (inside.size() < 2) continue;
            const Component* elder = inside.front();
            for (const Component* c : inside)
                if (c->birth_value < elder->birth_value ||
                    (c->birth_value == elder->birth_value &&
                     c->birth_index < elder->birth_index))
                    elder = c;
            for (const Component* c : inside) {
                if (c == elder) continue;
                if (t > c->birth_value) bars.push_back({c->birth_value, t, 1});
                // plateau merge (t == birth) produces no bar
            }
        }
        previous = std::move(current);
    }

    double global_min = series[0];
    for (const double v : series) global_min = std::min(global_min, v);
    bars.push_back({global_min, kInfiniteDeath, 1});
    return bars;
}

// --- MST ---------------------------------------------------------------

std::vector<double> mst_edge_lengths(const tda::PointCloud& cloud) {
    const std::size_t n = cloud.size();
    std::vector<double> lengths;
    if (n < 2) return lengths;
    std::vector<bool> in_tree(n, false);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    in_tree[0] = true;
    for (std::size_t j = 1; j < n; ++j)
        best[j] = squared_distance(cloud, 0, j);
    for (std::size_t round = 1; round < n; ++round) {
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!in_tree[j] && (pick == n || best[j] < best[pick])) pick = j;
        lengths.push_back(std::sqrt(best[pick]));
        in_tree[pick] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (!in_tree[j])
                best[j] = std::min(best[j], squared_distance(cloud, pick, j));
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// --- full boundary matrix reduction --------------------------------------

BruteBars rips_bruteforce(const tda::PointCloud& cloud) {
    const std::size_t n = cloud.size();
    struct Simplex {
        double diam;
        int dim;
        std::array<std::uint32_t, 3> verts; // unused slots = UINT32_MAX
    };
    const auto dist = [&](std::size_t i, std::size_t j) {
        return std::sqrt(squared_distance(cloud, i, j));
    };

    std::vector<Simplex> simplices;
    for (std::uint32_t v = 0; v < n; ++v)
        simplices.push_back({0.0, 0, {v, UINT32_MAX, UINT32_MAX}});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            simplices.push_back({dist(i, j), 1, {i, j, UINT32_MAX}});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k) {
                const double diam =
                    std::max({dist(i, j), dist(i, k), dist(j, k)});
                simplices.push_back({diam, 2, {i, j, k}});
            }
    std::sort(simplices.begin(), simplices.end(),
              [](const Simplex& a, const Simplex& b) {
                  if (a.diam != b.diam) return a.diam < b.diam;
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.verts < b.verts;
              });

    std::map<std::array<std::uint32_t, 3>, std::size_t> index_of;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        index_of[simplices[i].verts] = i;

    // columns over Z/2 as sorted index sets
    std::vector<std::vector<std::size_t>> column(simplices.size());
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const Simplex& s = simplices[i];
        if (s.dim == 1) {
            column[i] = {index_of[{s.verts[0], UINT32_MAX, UINT32_MAX}],
                         index_of[{s.verts[1], UINT32_MAX, UINT32_MAX}]};
        } else if (s.dim == 2) {
            column[i] = {index_of[{s.verts[0], s.verts[1], UINT32_MAX}],
                         index_of[{s.verts[0], s.verts[2], UINT32_MAX}],
                         index_of[{s.verts[1], s.verts[2], UINT32_MAX}]};
        }
        std::sort(column[i].begin(), column[i].end());
    }

    std::vector<std::ptrdiff_t> owner(simplices.size(), -1);
    const auto xor_cols = [](std::vector<std::size_t>& a,
                             const std::vector<std::size_t>& b) {
        std::vector<std::size_t> out;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(out));
        a.swap(out);
    };
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        while (!column[i].empty()) {
            const std::size_t low = column[i].back();
            if (owner[low] < 0) {
                owner[low] = static_cast<std::ptrdiff_t>(i);
                break;
            }
            xor_cols(column[i], column[static_cast<std::size_t>(owner[low])]);
        }
    }

    BruteBars out;
    std::vector<bool> paired(simplices.size(), false);
    for (std::size_t low = 0; low < simplices.size(); ++low) {
        if (owner[low] < 0) continue;
        const auto hi = static_cast<std::size_t>(owner[low]);
        paired[low] = true;
        paired[hi] = true;
        const Simplex& creator = simplices[low];
        const Simplex& destroyer = simplices[hi];
        if (creator.dim == 0) {
            out.h0.push_back({0.0, destroyer.diam, 1});
        } else if (creator.dim == 1 && destroyer.diam > creator.diam) {
            out.h1.push_back({creator.diam, destroyer.diam, 1});
        }
    }
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (paired[i] || !column[i].empty()) continue;
        if (simplices[i].dim == 0) out.h0.push_back({0.0, kInfiniteDeath, 1});
        if (simplices[i].dim == 1)
            out.h1.push_back({simplices[i].diam, kInfiniteDeath, 1});
    }
    return out;
}

// --- FAPC quadrature ------------------------------------------------------

std::complex<double> fapc_quadrature(const PersistenceDiagram& diagram,
                                     std::size_t n,
                                     const curves::Domain& domain) {
    const double period = domain.width();

    // local step-curve reconstruction: clipped endpoints, midpoint probing
    double total = 0.0;
    for (const Bar& bar : diagram.bars)
        if (bar.finite()) total += bar.multiplicity * (bar.death - bar.birth);

    std::set<double> cuts{domain.d_min, domain.d_max};
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite() || bar.death <= bar.birth) continue;
        const double lo = std::max(bar.birth, domain.d_min);
        const double hi = std::min(bar.death, domain.d_max);
        if (hi <= lo) continue;
        cuts.insert(lo);
        cuts.insert(hi);
    }
    const std::vector<double> edges(cuts.begin(), cuts.end());

    const auto curve_value = [&](double x) {
        double acc = 0.0;
        for (const Bar& bar : diagram.bars) {
            if (!bar.finite() || bar.death <= bar.birth) continue;
            if (x < bar.birth || x >= bar.death) continue;
            const double ratio = (bar.death - bar.birth) / total;
            acc += bar.multiplicity * (-ratio * std::log(ratio));
        }
        return acc;
    };

    std::complex<double> acc(0.0, 0.0);
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double lo = edges[p];
        const double hi = edges[p + 1];
        if (hi <= lo) continue;
        const double value = curve_value(0.5 * (lo + hi));
        if (value == 0.0) continue;
        const std::size_t chunks = 4 * (n + 1);
        for (std::size_t c = 0; c < chunks; ++c) {
            const double a = lo + (hi - lo) * static_cast<double>(c) /
                                      static_cast<double>(chunks);
            const double b = lo + (hi - lo) * static_cast<double>(c + 1) /
                                      static_cast<double>(chunks);
            const double half = 0.5 * (b - a);
            const double mid = 0.5 * (a + b);
            for (int g = 0; g < 10; ++g) {
                const double x = mid + half * kGlNode[g];
                const double angle =
                    2.0 * kPi * static_cast<double>(n) * x / period;
                acc += kGlWeight[g] * half * value *
                       std::complex<double>(std::cos(angle), std::sin(angle));
            }
        }
    }
    return 2.0 / period * acc;
}

// --- HEPC references ------------------------------------------------------

namespace {

long double ortho_hermite_ld(unsigned n, long double x) {
    const long double h0 = std::pow((long double)kPi, -0.25L) * std::exp(-0.5L * x * x);
    if (n == 0) return h0;
    long double prev = h0;
    long double cur = std::sqrt(2.0L) * x * h0;
    for (unsigned k = 1; k < n; ++k) {
        const long double next = x * std::sqrt(2.0L / (k + 1)) * cur -
                                 std::sqrt((long double)k / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

struct WeightedBar {
    long double birth, death, weight;
};

std::vector<WeightedBar> scaled_bars_ld(const PersistenceDiagram& diagram,
                                        double scale) {
    long double total = 0.0L;
    for (const Bar& bar : diagram.bars)
        if (bar.finite()) total += bar.multiplicity * (long double)(bar.death - bar.birth);
    std::vector<WeightedBar> out;
    for (const Bar& bar : diagram.bars) {
        if (!bar.finite() || bar.death <= bar.birth) continue;
        const long double ratio = (long double)(bar.death - bar.birth) / total;
        const long double w = bar.multiplicity * (-ratio * std::log(ratio));
        out.push_back({(long double)bar.birth * scale, (long double)bar.death * scale, w});
    }
    return out;
}

} // namespace

std::vector<double> hepc_recursion_reference(const PersistenceDiagram& diagram,
                                             std::size_t n_coeffs, double scale) {
    std::vector<double> alpha(n_coeffs, 0.0);
    const std::vector<WeightedBar> bars = scaled_bars_ld(diagram, scale);
    if (bars.empty()) return alpha;

    const auto Phi = [](long double x) {
        return 0.5L * std::erfc(-x / std::sqrt(2.0L));
    };
    const auto phi = [](long double x) {
        return std::exp(-0.5L * x * x) / std::sqrt(2.0L * (long double)kPi);
    };

    std::vector<long double> a(n_coeffs, 0.0L);
    for (const WeightedBar& bar : bars)
        a[0] += bar.weight * (Phi(bar.death) - Phi(bar.birth));
    a[0] *= std::sqrt(2.0L) * std::pow((long double)kPi, 0.25L);
    if (n_coeffs > 1) {
        for (const WeightedBar& bar : bars)
            a[1] += bar.weight * (phi(bar.birth) - phi(bar.death));
        a[1] *= 2.0L * std::pow((long double)kPi, 0.25L);
    }
    for (std::size_t n = 1; n + 1 < n_coeffs; ++n) {
        long double jump = 0.0L;
        for (const WeightedBar& bar : bars)
            jump += bar.weight * (ortho_hermite_ld(static_cast<unsigned>(n), bar.birth) -
                                  ortho_hermite_ld(static_cast<unsigned>(n), bar.death));
        a[n + 1] = std::sqrt(2.0L / (long double)(n + 1)) * jump +
                   std::sqrt((long double)n / (long double)(n + 1)) * a[n - 1];
    }
    for (std::size_t i = 0; i < n_coeffs; ++i) alpha[i] = static_cast<double>(a[i]);
    return alpha;
}

std::vector<double> hepc_projection_quadrature(const PersistenceDiagram& diagram,
                                               std::size_t n_coeffs, double scale) {
    std::vector<double> alpha(n_coeffs, 0.0);
    const std::vector<WeightedBar> bars = scaled_bars_ld(diagram, scale);
    if (bars.empty()) return alpha;
    for (std::size_t n = 0; n < n_coeffs; ++n) {
        long double acc = 0.0L;
        for (const WeightedBar& bar : bars) {
            const long double lo = bar.birth;
            const long double hi = bar.death;
            // enough chunks that GL-10 resolves the oscillation of psi_n
            const std::size_t chunks =
                std::max<std::size_t>(16, static_cast<std::size_t>((hi - lo) * 4) + 8);
            long double integral = 0.0L;
            for (std::size_t c = 0; c < chunks; ++c) {
                const long double a = lo + (hi - lo) * (long double)c / chunks;
                const long double b = lo + (hi - lo) * (long double)(c + 1) / chunks;
                const long double half = 0.5L * (b - a);
                const long double mid = 0.5L * (a + b);
                for (int g = 0; g < 10; ++g) {
                    const long double x = mid + half * (long double)kGlNode[g];
                    integral += (long double)kGlWeight[g] * half *
                                ortho_hermite_ld(static_cast<unsigned>(n), x);
                }
            }
            acc += bar.weight * integral;
        }
        alpha[n] = static_cast<double>(acc);
    }
    return alpha;
}

// --- reference PCHIP ------------------------------------------------------

double pchip_reference(std::span<const double> x, std::span<const double> y,
                       double t) {
    const std::size_t n = x.size();
    if (t <= x.front()) return y.front();
    if (t >= x.back()) return y.back();

    std::vector<double> d(n, 0.0), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    d[0] = delta.front();
    d[n - 1] = delta.back();
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = delta[i - 1] * delta[i] <= 0.0 ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (delta[i] == 0.0) {
            d[i] = d[i + 1] = 0.0;
            continue;
        }
        double a = d[i] / delta[i];
        double b = d[i + 1] / delta[i];
        if (a < 0.0) { d[i] = 0.0; a = 0.0; }
        if (b < 0.0) { d[i + 1] = 0.0; b = 0.0; }
        if (a * a + b * b > 9.0) {
            const double tau = 3.0 / std::sqrt(a * a + b * b);
            d[i] = tau * a * delta[i];
            d[i + 1] = tau * b * delta[i];
        }
    }

    std::size_t i = 0;
    while (i + 2 < n && x[i + 1] <= t) ++i;
    const double h = x[i + 1] - x[i];
    const double u = (t - x[i]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y[i] + (u3 - 2 * u2 + u) * h * d[i] +
           (-2 * u3 + 3 * u2) * y[i + 1] + (u3 - u2) * h * d[i + 1];
}

// --- random diagrams ------------------------------------------------------

PersistenceDiagram random_diagram(std::uint64_t seed, std::size_t bars,
                                  double scale, bool with_essential,
                                  DiagramSource source, int dim) {
    SplitRng rng(seed);
    PersistenceDiagram d;
    d.dim = dim;
    d.source = source;
    for (std::size_t i = 0; i < bars; ++i) {
        const double birth = rng.next_unit() * scale;
        const double length = (0.05 + 0.95 * rng.next_unit()) * scale;
        d.bars.push_back({birth, birth + length, 1});
    }
    if (with_essential && !d.bars.empty())
        d.bars.push_back({0.0, kInfiniteDeath, 1});
    d.normalize();
    return d;
}

std::vector<std::pair<double, double>> sorted_pairs(std::span<const Bar> bars) {
    std::vector<std::pair<double, double>> out;
    for (const Bar& b : bars)
        for (std::uint32_t m = 0; m < b.multiplicity; ++m)
            out.emplace_back(b.birth, b.death);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<double, double>> sorted_pairs(const PersistenceDiagram& d) {
    return sorted_pairs(std::span<const Bar>(d.bars));
}

} // namespace flowtopo::testsupport
