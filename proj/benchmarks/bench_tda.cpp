#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "flowtopo/tda/maxmin.hpp"
#include "flowtopo/tda/rips.hpp"
#include "flowtopo/tda/sublevel.hpp"
#include "flowtopo/tda/takens.hpp"

using namespace flowtopo;

namespace {

// quasi-periodic signal shaped like filtered breathing
std::vector<double> breathing_like(std::size_t n, double rate_hz) {
    std::vector<double> f(n);
    double phase = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / rate_hz;
        phase += 2.0 * M_PI * 0.25 * (1.0 + 0.05 * std::sin(0.05 * t)) / rate_hz;
        f[i] = 8e-4 * (1.0 + 0.1 * std::sin(0.03 * t)) * std::sin(phase);
    }
    return f;
}

tda::PointCloud window_cloud(std::size_t max_points) {
    const std::vector<double> signal = breathing_like(1440, 8.0);
    tda::PointCloud cloud = tda::takens_embed(signal, 8, 3);
    if (cloud.size() > max_points)
        cloud = tda::maxmin_subsample(cloud, max_points, 7);
    return cloud;
}

} // namespace

static void BM_RipsH1(benchmark::State& state) {
    const tda::PointCloud cloud = window_cloud(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto diagrams = tda::rips_persistence(cloud, 1);
        benchmark::DoNotOptimize(diagrams);
    }
}
BENCHMARK(BM_RipsH1)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_MaxminSubsample(benchmark::State& state) {
    const std::vector<double> signal = breathing_like(1440, 8.0);
    const tda::PointCloud cloud = tda::takens_embed(signal, 8, 3);
    for (auto _ : state) {
        auto sub = tda::maxmin_subsample(cloud, static_cast<std::size_t>(state.range(0)), 7);
        benchmark::DoNotOptimize(sub);
    }
}
BENCHMARK(BM_MaxminSubsample)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_SublevelFullRate(benchmark::State& state) {
    const std::vector<double> signal =
        breathing_like(static_cast<std::size_t>(state.range(0)), 256.0);
    for (auto _ : state) {
        auto d = tda::sublevel_persistence(signal, DiagramSource::SublevelAirflow);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SublevelFullRate)->Arg(46080)->Unit(benchmark::kMillisecond);
