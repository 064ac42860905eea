#include <benchmark/benchmark.h>

#include "icb/idot.hpp"
#include "icb/schur.hpp"
#include "icb/ujrewrite.hpp"

using namespace icb;

static void StructureConstants(benchmark::State& state) {
    const std::int64_t d = state.range(0);
    basis_index(0, d);
    p0(d + d + 2);  // warm the shared product chains outside the loop
    p1(d + d + 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(structure_constants(basis_index(0, d), basis_index(0, d)));
    }
}
BENCHMARK(StructureConstants)->Arg(5)->Arg(15)->Arg(30);

static void TransferStep(benchmark::State& state) {
    const std::int64_t d = state.range(0);
    p0(d + 2);
    p1(d + 1);
    minpoly(d + 2);
    const SchurElement x = project(p1(d + 1), d + 2);
    for (auto _ : state) benchmark::DoNotOptimize(transfer(x));
}
BENCHMARK(TransferStep)->Arg(10)->Arg(30)->Arg(60);

static void RemarkProductCheck(benchmark::State& state) {
    const std::int64_t d = state.range(0);
    p0(d + 2);
    p1(d + 1);
    const TPoly t = TPoly::t();
    for (auto _ : state) {
        benchmark::DoNotOptimize(t * p0(d) == p1(d + 1).scaled(RatFunc(qint(d + 1))));
    }
}
BENCHMARK(RemarkProductCheck)->Arg(20)->Arg(60)->Arg(100);

static void LemmaCertification(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_a(n));
}
BENCHMARK(LemmaCertification)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
