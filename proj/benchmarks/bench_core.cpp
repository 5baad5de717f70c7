#include <benchmark/benchmark.h>

#include "qseries/appell.hpp"
#include "qseries/indefinite.hpp"
#include "qseries/multisum.hpp"
#include "qseries/theta.hpp"

using namespace qseries;

namespace {

void BM_SeriesMul(benchmark::State& state) {
    const Exp N = state.range(0);
    LaurentSeries a = pochhammer_inf(QMonomial{-1, 1}, 1, N);
    LaurentSeries b = invert(pochhammer_inf(QMonomial{1, 1}, 1, N));
    for (auto _ : state) {
        LaurentSeries c = mul(a, b);
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_Invert(benchmark::State& state) {
    const Exp N = state.range(0);
    LaurentSeries a = pochhammer_inf(QMonomial{1, 1}, 1, N);
    for (auto _ : state) {
        LaurentSeries c = invert(a);
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Invert)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_JTheta(benchmark::State& state) {
    const Exp N = state.range(0);
    for (auto _ : state) {
        LaurentSeries c = jtheta(QMonomial{-1, 3}, 2, N);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_JTheta)->Arg(50)->Arg(100)->Arg(200);

void BM_AppellM(benchmark::State& state) {
    const Exp N = state.range(0);
    for (auto _ : state) {
        LaurentSeries c = appell_m(QMonomial{1, 2}, 12, QMonomial{-1, 3}, N);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_AppellM)->Arg(40)->Arg(100);

void BM_ThetaNP(benchmark::State& state) {
    const Exp N = state.range(0);
    for (auto _ : state) {
        LaurentSeries c = theta_np(1, 4, QMonomial{-1, 3}, QMonomial{-1, 3}, 2, N);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ThetaNP)->Arg(30)->Arg(60);

void BM_RSeries(benchmark::State& state) {
    const Exp k = state.range(0);
    const Exp N = state.range(1);
    for (auto _ : state) {
        LaurentSeries c = r_series(1, k, N);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_RSeries)->Args({3, 40})->Args({4, 40})->Args({3, 100});

void BM_IndefiniteF(benchmark::State& state) {
    const Exp N = state.range(0);
    FabcParams p(3, 11, 3, QMonomial{1, 4}, QMonomial{1, 4}, 1);
    for (auto _ : state) {
        LaurentSeries c = indefinite_f(p, N);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_IndefiniteF)->Arg(30)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
