#include "dipath/euclid.hpp"
#include "dipath/homology.hpp"
#include "dipath/partitions.hpp"
#include "dipath/wk.hpp"

#include <benchmark/benchmark.h>

using namespace dipath;

namespace {

CubicalComplex cube_skeleton(std::int64_t n, std::int64_t s)
{
    return skeleton(CubicalComplex::full(LabelSet::numbered(static_cast<std::size_t>(n))), static_cast<int>(s));
}

void BM_BuildPk(benchmark::State& state)
{
    CubicalComplex const k = cube_skeleton(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_pk(k).size());
}
BENCHMARK(BM_BuildPk)->Args({5, 3})->Args({6, 3})->Args({6, 6});

void BM_BuildWk(benchmark::State& state)
{
    CubicalComplex const k = cube_skeleton(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_wk(k).field.size());
}
BENCHMARK(BM_BuildWk)->Args({5, 3})->Args({6, 3});

void BM_GradientCheck(benchmark::State& state)
{
    WkField const w = build_wk(cube_skeleton(state.range(0), state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_gradient(w.field));
}
BENCHMARK(BM_GradientCheck)->Args({5, 3})->Args({6, 3});

void BM_CriticalSequences(benchmark::State& state)
{
    CubicalComplex const k = cube_skeleton(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_critical_sequences(k).size());
}
BENCHMARK(BM_CriticalSequences)->Args({6, 3})->Args({8, 3})->Args({10, 4});

void BM_CriticalInductive(benchmark::State& state)
{
    CubicalComplex const k = cube_skeleton(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(critical_inductive(k).size());
}
BENCHMARK(BM_CriticalInductive)->Args({6, 3})->Args({7, 3});

void BM_ConfCounts(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(conf_counts(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))).size());
}
BENCHMARK(BM_ConfCounts)->Args({10, 3})->Args({12, 4});

void BM_Routes(benchmark::State& state)
{
    auto const side = static_cast<int>(state.range(0));
    EuclideanComplex const k = EuclideanComplex::box({side, side}).without(
        {ElementaryCube::make({1, 1}, {2, 2}), ElementaryCube::make({side - 2, side - 2}, {side - 1, side - 1})});
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_critical_routes(k).size());
}
BENCHMARK(BM_Routes)->Arg(5)->Arg(8);

void BM_OracleBetti(benchmark::State& state)
{
    PartitionPoset const pk = build_pk(cube_skeleton(state.range(0), state.range(1)));
    BettiOptions opts;
    opts.max_dim = static_cast<int>(state.range(2));
    opts.max_simplices = 10'000'000;
    for (auto _ : state)
        benchmark::DoNotOptimize(order_complex_betti(pk.poset(), opts).betti.size());
}
BENCHMARK(BM_OracleBetti)->Args({5, 3, 2})->Args({6, 3, 2})->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
