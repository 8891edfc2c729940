#include <benchmark/benchmark.h>

#include "vvmf/qseries.hpp"

using namespace vvmf;

static void BM_Eisenstein(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        auto e4 = eisenstein(4, n);
        benchmark::DoNotOptimize(e4);
    }
}
BENCHMARK(BM_Eisenstein)->Arg(25)->Arg(50)->Arg(100);

static void BM_SeriesMultiply(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    auto e4 = eisenstein(4, n).series;
    auto e6 = eisenstein(6, n).series;
    for (auto _ : state) {
        auto prod = e4 * e6;
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

static void BM_EtaQuotient(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        auto z1 = eta_quotient({{Rational(1), 12}, {Rational(3), -12}}, n);
        benchmark::DoNotOptimize(z1);
    }
}
BENCHMARK(BM_EtaQuotient)->Arg(25)->Arg(50);

static void BM_KappaInversion(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        auto w = kappa_over_1728(n);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_KappaInversion)->Arg(25)->Arg(50);

static void BM_PowFrac(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    auto z1 = eta_quotient({{Rational(1), 12}, {Rational(3), -12}}, n);
    Rational e(-7, 12);
    for (auto _ : state) {
        auto p = z1.pow_frac(e);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PowFrac)->Arg(25)->Arg(50);
