#include <benchmark/benchmark.h>

#include "archimedes/interval.hpp"

using namespace archimedes;

namespace {

void BM_IntervalMul(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    const Interval a(Rational(314159, 100000), Rational(314160, 100000), bits);
    const Interval b(Rational(271828, 100000), Rational(271829, 100000), bits);
    for (auto _ : state) {
        Interval c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_IntervalMul)->Arg(128)->Arg(1024);

void BM_IntervalSqrt(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    const Interval x(Rational(2), bits);
    for (auto _ : state) {
        Interval s = interval_sqrt(x);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_IntervalSqrt)->Arg(128)->Arg(1024);

void BM_ToDecimal(benchmark::State& state) {
    const Interval x = interval_sqrt(Interval(Rational(2), 256));
    for (auto _ : state) {
        auto d = to_decimal(x, 50);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_ToDecimal);

}  // namespace
