#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "flowtopo/ingest/sqi.hpp"
#include "flowtopo/preprocess/breaths.hpp"
#include "flowtopo/preprocess/filter.hpp"
#include "flowtopo/preprocess/irr.hpp"

using namespace flowtopo;

namespace {

std::vector<double> window_signal() {
    std::vector<double> f(46080);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double t = static_cast<double>(i) / 256.0;
        f[i] = 8e-4 * std::sin(2.0 * M_PI * 0.25 * t) + 1e-4 * t / 180.0;
    }
    return f;
}

} // namespace

static void BM_DetrendLowpass(benchmark::State& state) {
    const std::vector<double> f = window_signal();
    for (auto _ : state) {
        auto out = preprocess::detrend_lowpass(f, 256.0);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_DetrendLowpass)->Unit(benchmark::kMillisecond);

static void BM_DetectBreathsAndIrr(benchmark::State& state) {
    const std::vector<double> f = preprocess::detrend_lowpass(window_signal(), 256.0);
    for (auto _ : state) {
        auto breaths = preprocess::detect_breaths(f, 256.0);
        auto irr_signal = preprocess::irr(breaths, 180.0);
        benchmark::DoNotOptimize(irr_signal);
    }
}
BENCHMARK(BM_DetectBreathsAndIrr)->Unit(benchmark::kMillisecond);

static void BM_Sqi(benchmark::State& state) {
    const std::vector<double> f = window_signal();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ingest::sqi({f.data(), static_cast<std::size_t>(30 * 256)}, 256.0));
    }
}
BENCHMARK(BM_Sqi)->Unit(benchmark::kMillisecond);
