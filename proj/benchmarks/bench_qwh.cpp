#include <benchmark/benchmark.h>

#include "qwh/bargmann.hpp"
#include "qwh/fock.hpp"
#include "qwh/foliation.hpp"
#include "qwh/runner.hpp"
#include "qwh/weyl.hpp"

using namespace qwh;

static void BM_Expm(benchmark::State& state) {
    const int n = int(state.range(0));
    auto [x, p] = fock::quadratures(n);
    Matrix gen = 0.15 * (x.mat * x.mat + p.mat * p.mat);
    for (auto _ : state) benchmark::DoNotOptimize(expm(gen));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Expm)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_SqueezeConjugation(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::bogoliubov_conjugate(n, 0.3));
}
BENCHMARK(BM_SqueezeConjugation)->Arg(32)->Arg(64)->Arg(128);

static void BM_WeylW(benchmark::State& state) {
    const int n = int(state.range(0));
    weyl::WeylLabel z{0.6, -0.8};
    for (auto _ : state) benchmark::DoNotOptimize(weyl::weyl_W(n, z));
}
BENCHMARK(BM_WeylW)->Arg(32)->Arg(64)->Arg(128);

static void BM_QwhBattery(benchmark::State& state) {
    const int polys = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            runner::qwh_battery_deviation(32, polys, 10, 7));
}
BENCHMARK(BM_QwhBattery)->Arg(10)->Arg(100);

static void BM_FoliationScan(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            foliation::foliation_scan(0.5, {1, 10, 100, 1000}, 64));
}
BENCHMARK(BM_FoliationScan);

BENCHMARK_MAIN();
