#include <benchmark/benchmark.h>

#include "archimedes/exhaustion.hpp"
#include "archimedes/polygon.hpp"

using namespace archimedes;

namespace {

void BM_PiEnclosure(benchmark::State& state) {
    const int doublings = static_cast<int>(state.range(0));
    const int bits = static_cast<int>(state.range(1));
    for (auto _ : state) {
        Interval pi = pi_enclosure(doublings, bits);
        benchmark::DoNotOptimize(pi);
    }
}
BENCHMARK(BM_PiEnclosure)->Args({4, 128})->Args({10, 128})->Args({16, 256})->Args({20, 512});

void BM_SqueezeState(benchmark::State& state) {
    const int doublings = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SqueezeState s = squeeze_state(doublings, Rational(1), 128);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SqueezeState)->Arg(4)->Arg(12);

}  // namespace
