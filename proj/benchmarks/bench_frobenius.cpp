#include <benchmark/benchmark.h>

#include "vvmf/scan.hpp"

using namespace vvmf;

static void BM_HardHexagonSolve(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    ExponentTuple e({Rational(1, 40), Rational(31, 40), Rational(-1, 40), Rational(9, 40)});
    auto ode = theta_from_exponents(4, e);
    for (auto _ : state) {
        auto sols = family_solve(ode, e, n);
        benchmark::DoNotOptimize(sols);
    }
}
BENCHMARK(BM_HardHexagonSolve)->Arg(25)->Arg(40)->Arg(80);

static void BM_QExpansion(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    ExponentTuple e({Rational(1, 40), Rational(31, 40), Rational(-1, 40), Rational(9, 40)});
    auto ode = theta_from_exponents(4, e);
    auto sols = family_solve(ode, e, n + 2);
    auto kappa = kappa_over_1728(n + 2);
    for (auto _ : state) {
        auto exp = to_q_expansion(sols, n, std::nullopt, kappa);
        benchmark::DoNotOptimize(exp);
    }
}
BENCHMARK(BM_QExpansion)->Arg(25)->Arg(40);

static void BM_Gamma03Family(benchmark::State& state) {
    auto n = static_cast<size_t>(state.range(0));
    Rational l(-7, 12);
    for (auto _ : state) {
        auto fam = gamma03_family(l, n);
        benchmark::DoNotOptimize(fam);
    }
}
BENCHMARK(BM_Gamma03Family)->Arg(20)->Arg(40);

static void BM_ScanTuplePipeline(benchmark::State& state) {
    ScanConfig cfg;
    cfg.denominators = {12};
    cfg.exp_min = Rational(-1);
    cfg.exp_max = Rational(1);
    cfg.n_terms = 10;
    cfg.stabilization_terms = 16;
    for (auto _ : state) {
        auto results = rank4_scan(cfg);
        benchmark::DoNotOptimize(results);
    }
}
BENCHMARK(BM_ScanTuplePipeline);

static void BM_FusionTensor(benchmark::State& state) {
    auto s = hard_hexagon_smatrix(256);
    for (auto _ : state) {
        auto n = fusion(s, 0);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_FusionTensor);
