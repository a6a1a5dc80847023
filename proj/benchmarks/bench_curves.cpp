#include <benchmark/benchmark.h>

#include "flowtopo/curves/fapc.hpp"
#include "flowtopo/curves/hepc.hpp"
#include "flowtopo/curves/persistence_curve.hpp"
#include "flowtopo/curves/residual.hpp"
#include "flowtopo/util/rng.hpp"

using namespace flowtopo;

namespace {

PersistenceDiagram synthetic_diagram(std::size_t bars, double scale) {
    SplitRng rng(99);
    PersistenceDiagram d;
    for (std::size_t i = 0; i < bars; ++i) {
        const double birth = rng.next_unit() * scale;
        d.bars.push_back({birth, birth + (0.1 + rng.next_unit()) * scale, 1});
    }
    d.normalize();
    return d;
}

} // namespace

static void BM_FapcCoefficients(benchmark::State& state) {
    const PersistenceDiagram d =
        synthetic_diagram(static_cast<std::size_t>(state.range(0)), 1e-4);
    const auto dom = *curves::ap_domain(d);
    for (auto _ : state) {
        auto c = curves::fapc_coefficients(d, 15, dom);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_FapcCoefficients)->Arg(64)->Arg(512);

static void BM_HepcCoefficients(benchmark::State& state) {
    const PersistenceDiagram d =
        synthetic_diagram(static_cast<std::size_t>(state.range(0)), 1e-4);
    const double scale = 5.0 / d.max_finite_death();
    for (auto _ : state) {
        auto c = curves::hepc_coefficients(d, 15, scale);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_HepcCoefficients)->Arg(64)->Arg(512);

static void BM_ResidualGrid(benchmark::State& state) {
    const PersistenceDiagram d = synthetic_diagram(256, 1e-4);
    const auto curve = curves::entropy_curve(d);
    const auto coeffs = curves::fapc_coefficients(d, 15, *curves::ap_domain(d));
    for (auto _ : state) {
        benchmark::DoNotOptimize(curves::approximation_residual(curve, coeffs));
    }
}
BENCHMARK(BM_ResidualGrid);
