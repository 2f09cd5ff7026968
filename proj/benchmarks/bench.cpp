#include <benchmark/benchmark.h>

#include "cloven/enumerate.hpp"
#include "cloven/homology.hpp"
#include "cloven/report.hpp"

using namespace cloven;

static void BM_Enumerate(benchmark::State& state) {
    Arity arity(3, {static_cast<int>(state.range(0)), 1, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_cells(arity, 12));
    state.SetLabel(arity.to_string());
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Arg(3);

static void BM_BuildComplex(benchmark::State& state) {
    Arity arity(3, {static_cast<int>(state.range(0)), 1, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(build_full_complex(arity, 12));
    state.SetLabel(arity.to_string());
}
BENCHMARK(BM_BuildComplex)->Arg(1)->Arg(2)->Arg(3);

static void BM_Cohomology(benchmark::State& state) {
    Arity arity(3, {static_cast<int>(state.range(0)), 1, 0});
    CellComplex full = build_full_complex(arity, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology(full));
    state.SetLabel(arity.to_string());
}
BENCHMARK(BM_Cohomology)->Arg(1)->Arg(2)->Arg(3);

static void BM_VerifyArity(benchmark::State& state) {
    Arity arity(static_cast<int>(state.range(0)), std::vector<int>(state.range(0), 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_arity(arity, 12));
    state.SetLabel(arity.to_string());
}
BENCHMARK(BM_VerifyArity)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
