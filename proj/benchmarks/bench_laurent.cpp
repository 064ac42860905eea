#include <benchmark/benchmark.h>

#include "icb/laurent.hpp"

#include <random>

using namespace icb;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int terms, std::int64_t exp_range) {
    std::uniform_int_distribution<std::int64_t> exp(-exp_range, exp_range);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    std::map<std::int64_t, BigInt> t;
    for (int i = 0; i < terms; ++i) t[exp(rng)] += BigInt(coeff(rng));
    return LaurentPoly::from_terms(t);
}

}  // namespace

static void MulSchoolbook(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto a = random_poly(rng, static_cast<int>(state.range(0)), state.range(0));
    const auto b = random_poly(rng, static_cast<int>(state.range(0)), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(laurent_detail::mul_schoolbook(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(MulSchoolbook)->Range(16, 1024)->Complexity();

static void MulKronecker(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto a = random_poly(rng, static_cast<int>(state.range(0)), state.range(0));
    const auto b = random_poly(rng, static_cast<int>(state.range(0)), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(laurent_detail::mul_kronecker(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(MulKronecker)->Range(16, 4096)->Complexity();

static void MulByQuantumInteger(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto a = random_poly(rng, static_cast<int>(state.range(0)), state.range(0));
    const auto q = qint(25);
    for (auto _ : state) benchmark::DoNotOptimize(a * q);
}
BENCHMARK(MulByQuantumInteger)->Range(64, 4096);

static void Gcd(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto g = random_poly(rng, 6, 6);
    const auto a = random_poly(rng, static_cast<int>(state.range(0)), state.range(0)) * g;
    const auto b = random_poly(rng, static_cast<int>(state.range(0)), state.range(0)) * g;
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(Gcd)->Range(8, 256);

BENCHMARK_MAIN();
