#include "flowtopo/tda/sublevel.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace flowtopo::tda {

namespace {

struct UnionFind {
    std::vector<std::int64_t> parent;
    // birth of the component at each root: (value, vertex index)
    std::vector<double> birth_value;
    std::vector<std::size_t> birth_index;

    explicit UnionFind(std::size_t n)
        : parent(n, -1), birth_value(n, 0.0), birth_index(n, 0) {}

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent[root] >= 0) root = static_cast<std::size_t>(parent[root]);
        while (parent[x] >= 0) {
            const auto next = static_cast<std::size_t>(parent[x]);
            parent[x] = static_cast<std::int64_t>(root);
            x = next;
        }
        return root;
    }
};

} // namespace

PersistenceDiagram sublevel_persistence(std::span<const double> series,
                                        DiagramSource source) {
    PersistenceDiagram diagram;
    diagram.dim = 0;
    diagram.source = source;
    const std::size_t n = series.size();
    if (n == 0) return diagram;

    // process vertices by (value, index)
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (series[a] != series[b]) return series[a] < series[b];
        return a < b;
    });

    UnionFind uf(n);
    std::vector<bool> alive(n, false);
    for (const std::size_t v : order) {
        alive[v] = true;
        uf.birth_value[v] = series[v];
        uf.birth_index[v] = v;
        for (const std::size_t u : {v == 0 ? n : v - 1, v + 1 == n ? n : v + 1}) {
            if (u >= n || !alive[u]) continue;
            const std::size_t ru = uf.find(u);
            const std::size_t rv = uf.find(v);
            if (ru == rv) continue;
            // elder rule: the component with the smaller (birth value, birth
            // index) survives; the younger one dies at the current value
            std::size_t winner = ru, loser = rv;
            if (uf.birth_value[rv] < uf.birth_value[ru] ||
                (uf.birth_value[rv] == uf.birth_value[ru] &&
                 uf.birth_index[rv] < uf.birth_index[ru])) {
                winner = rv;
                loser = ru;
            }
            const double death = series[v];
            if (death > uf.birth_value[loser]) {
                diagram.bars.push_back({uf.birth_value[loser], death, 1});
            }
            // plateau merges (death == birth) produce no bar: the equal
            // values are one component
            uf.parent[loser] = static_cast<std::int64_t>(winner);
        }
    }

    const std::size_t root = uf.find(order.front());
    diagram.bars.push_back({uf.birth_value[root], kInfiniteDeath, 1});
    diagram.normalize();
    return diagram;
}

} // namespace flowtopo::tda
