// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to taste.

#include <benchmark/benchmark.h>

#include "symdet/resolution.hpp"
#include "symdet/schur_rank.hpp"
#include "symdet/verify.hpp"

using namespace symdet;

static void BM_BettiSerial(benchmark::State& state)
{
    const RingParams p = RingParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_serial(p));
}

static void BM_BettiParallel(benchmark::State& state)
{
    const RingParams p = RingParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table(p));
}

BENCHMARK(BM_BettiSerial)->Args({8, 2})->Args({12, 2})->Args({14, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->Args({8, 2})->Args({12, 2})->Args({14, 4})->Unit(benchmark::kMillisecond);

static void BM_SchurHookContent(benchmark::State& state)
{
    const Partition p = make_partition({4, 3, 3, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(schur_rank(p, static_cast<int>(state.range(0))));
}

static void BM_SchurTableauOracle(benchmark::State& state)
{
    const Partition shape = conjugate(make_partition({4, 3, 3, 2}));
    for (auto _ : state)
        benchmark::DoNotOptimize(ssyt_count(shape, static_cast<int>(state.range(0))));
}

BENCHMARK(BM_SchurHookContent)->Arg(4)->Arg(6);
BENCHMARK(BM_SchurTableauOracle)->Arg(4)->Arg(6);

static void BM_VerifyGrid(benchmark::State& state)
{
    VerifyOptions opts;
    opts.n_max = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_verify(opts));
}

BENCHMARK(BM_VerifyGrid)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
