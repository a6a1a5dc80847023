#include "flowtopo/tda/rips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "flowtopo/errors.hpp"

namespace flowtopo::tda {

namespace {

struct Edge {
    double length;
    std::uint32_t a, b; // a < b
};

struct DisjointSet {
    std::vector<std::uint32_t> parent;

    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[y] = x;
        return true;
    }
};

// coboundary heap entry: one triangle, identified by its sorted vertex
// triple packed into 48 bits; min-heap by (diameter, key)
struct CofaceEntry {
    double diam;
    std::uint64_t key;
};

struct CofaceOrder {
    bool operator()(const CofaceEntry& x, const CofaceEntry& y) const {
        if (x.diam != y.diam) return x.diam > y.diam; // min-heap
        return x.key > y.key;
    }
};

using CofaceHeap =
    std::priority_queue<CofaceEntry, std::vector<CofaceEntry>, CofaceOrder>;

std::uint64_t triangle_key(std::uint64_t n, std::uint32_t a, std::uint32_t b,
                           std::uint32_t c) {
    std::uint32_t v[3] = {a, b, c};
    std::sort(std::begin(v), std::end(v));
    return (static_cast<std::uint64_t>(v[0]) * n + v[1]) * n + v[2];
}

// Z/2 pivot: smallest (diam, key) entry after cancelling equal pairs.
// The entry is removed from the heap; callers push it back if needed.
bool pop_pivot(CofaceHeap& heap, CofaceEntry& out) {
    while (!heap.empty()) {
        CofaceEntry top = heap.top();
        heap.pop();
        if (!heap.empty() && heap.top().key == top.key) {
            heap.pop(); // pair cancels over Z/2
            continue;
        }
        out = top;
        return true;
    }
    return false;
}

} // namespace

double enclosing_radius(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    double radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            worst = std::max(worst, squared_distance(cloud, i, j));
        }
        radius = std::min(radius, worst);
    }
    return std::sqrt(radius);
}

std::vector<PersistenceDiagram> rips_persistence(const PointCloud& cloud,
                                                 int max_dim,
                                                 std::optional<double> threshold,
                                                 DiagramSource source) {
    const std::size_t n = cloud.size();
    if (n == 0) throw Error("rips_persistence: empty cloud");
    if (max_dim < 0 || max_dim > 1)
        throw Error("rips_persistence: max_dim must be 0 or 1");

    PersistenceDiagram h0;
    h0.dim = 0;
    h0.source = source;

    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            edges.push_back({std::sqrt(squared_distance(cloud, i, j)), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        if (x.length != y.length) return x.length < y.length;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    // H0 over the full filtration: Kruskal merges, one bar per tree edge.
    // Edges that close a cycle are the H1 birth candidates.
    std::vector<Edge> positive;
    {
        DisjointSet ds(n);
        for (const Edge& e : edges) {
            if (ds.unite(e.a, e.b)) {
                h0.bars.push_back({0.0, e.length, 1});
            } else {
                positive.push_back(e);
            }
        }
    }
    h0.bars.push_back({0.0, kInfiniteDeath, 1});
    h0.normalize();

    std::vector<PersistenceDiagram> result;
    result.push_back(std::move(h0));
    if (max_dim < 1) return result;

    PersistenceDiagram h1;
    h1.dim = 1;
    h1.source = source;
    if (n < 3) {
        result.push_back(std::move(h1));
        return result;
    }

    const double radius = threshold ? *threshold : enclosing_radius(cloud);

    // dense distance matrix for the coboundary scans
    std::vector<double> dist(n * n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const double d = std::sqrt(squared_distance(cloud, i, j));
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }

    // Persistent cohomology in dimension 1: reduce the coboundary column
    // of every positive edge within the threshold, in decreasing
    // (length, a, b) order. The pivot is the lowest (diameter, key)
    // triangle; a column whose initial pivot is unclaimed terminates
    // immediately (the ubiquitous zero-persistence case), otherwise the
    // owning edge's coboundary is added and the pivot re-extracted. A
    // column that empties is a cycle that never dies within the
    // threshold; with the enclosing-radius default that cannot happen.
    while (!positive.empty() && positive.back().length > radius) positive.pop_back();

    std::unordered_map<std::uint64_t, std::uint32_t> pivot_owner;
    pivot_owner.reserve(positive.size());

    const auto push_coboundary = [&](const Edge& e, CofaceHeap& heap) {
        for (std::uint32_t v = 0; v < n; ++v) {
            if (v == e.a || v == e.b) continue;
            const double dav = dist[e.a * n + v];
            const double dbv = dist[e.b * n + v];
            if (dav > radius || dbv > radius) continue;
            const double diam = std::max({e.length, dav, dbv});
            heap.push({diam, triangle_key(n, e.a, e.b, v)});
        }
    };

    CofaceHeap heap;
    for (std::size_t rank = positive.size(); rank-- > 0;) {
        const Edge& e = positive[rank];
        const auto column = static_cast<std::uint32_t>(rank);
        heap = CofaceHeap();

        // first pass with the apparent-pair shortcut: cofaces arrive in
        // increasing key order, so the first same-diameter coface is the
        // column's initial pivot
        bool shortcut_done = false;
        bool shortcut_armed = true;
        for (std::uint32_t v = 0; v < n && !shortcut_done; ++v) {
            if (v == e.a || v == e.b) continue;
            const double dav = dist[e.a * n + v];
            const double dbv = dist[e.b * n + v];
            if (dav > radius || dbv > radius) continue;
            const double diam = std::max({e.length, dav, dbv});
            const std::uint64_t key = triangle_key(n, e.a, e.b, v);
            if (shortcut_armed && diam == e.length) {
                shortcut_armed = false;
                if (pivot_owner.find(key) == pivot_owner.end()) {
                    pivot_owner.emplace(key, column); // zero-persistence pair
                    shortcut_done = true;
                    break;
                }
            }
            heap.push({diam, key});
        }
        if (shortcut_done) continue;

        while (true) {
            CofaceEntry pivot{};
            if (!pop_pivot(heap, pivot)) {
                h1.bars.push_back({e.length, kInfiniteDeath, 1});
                break;
            }
            const auto owner = pivot_owner.find(pivot.key);
            if (owner == pivot_owner.end()) {
                pivot_owner.emplace(pivot.key, column);
                if (pivot.diam > e.length)
                    h1.bars.push_back({e.length, pivot.diam, 1});
                break;
            }
            heap.push(pivot); // cancels against the owner's copy
            push_coboundary(positive[owner->second], heap);
        }
    }

    h1.normalize();
    result.push_back(std::move(h1));
    return result;
}

} // namespace flowtopo::tda
