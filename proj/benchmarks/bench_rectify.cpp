#include <benchmark/benchmark.h>

#include "archimedes/rectify.hpp"

using namespace archimedes;

namespace {

void BM_InscribedCycloid(benchmark::State& state) {
    const auto segments = static_cast<std::int64_t>(state.range(0));
    const CurveSpec curve = make_cycloid(Rational(1), 128);
    for (auto _ : state) {
        Interval len = inscribed_length(curve, segments, 128);
        benchmark::DoNotOptimize(len);
    }
}
BENCHMARK(BM_InscribedCycloid)->Arg(64)->Arg(512);

void BM_InscribedCircle(benchmark::State& state) {
    const auto segments = static_cast<std::int64_t>(state.range(0));
    const CurveSpec curve = make_circle(Rational(1), 128);
    for (auto _ : state) {
        Interval len = inscribed_length(curve, segments, 128);
        benchmark::DoNotOptimize(len);
    }
}
BENCHMARK(BM_InscribedCircle)->Arg(256)->Arg(2048);

void BM_LogSpiralTail(benchmark::State& state) {
    for (auto _ : state) {
        Interval len = log_spiral_tail(Rational(1), Rational(40), 128);
        benchmark::DoNotOptimize(len);
    }
}
BENCHMARK(BM_LogSpiralTail);

}  // namespace
