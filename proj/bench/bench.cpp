// Serial reference vs OpenMP kernels: Bareiss elimination and the subset
// search in is_irreducible.

#include "tropsa/classify.hpp"
#include "tropsa/examples.hpp"
#include "tropsa/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tropsa;

namespace {

RationalMatrix random_matrix(std::size_t n, std::size_t m) {
    std::mt19937_64 rng(n * 1000 + m);
    std::uniform_int_distribution<long> d(-9, 9);
    RationalMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = d(rng);
    return a;
}

void BM_RankSerial(benchmark::State& st) {
    const auto a = random_matrix(st.range(0), st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::serial::rank(a));
}

void BM_RankParallel(benchmark::State& st) {
    const auto a = random_matrix(st.range(0), st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::rank(a));
}

// the abundancy matrix of the largest template
void BM_Phi4RankSerial(benchmark::State& st) {
    const auto k = abundancy_matrix(examples::builtin("phi4"));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::serial::rank(k));
}

void BM_Phi4RankParallel(benchmark::State& st) {
    const auto k = abundancy_matrix(examples::builtin("phi4"));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::rank(k));
}

void BM_IrreducibleSerial(benchmark::State& st) {
    const auto c = examples::builtin(st.range(0) ? "phi4" : "phi3");
    for (auto _ : st) benchmark::DoNotOptimize(serial::is_irreducible(c));
}

void BM_IrreducibleParallel(benchmark::State& st) {
    const auto c = examples::builtin(st.range(0) ? "phi4" : "phi3");
    for (auto _ : st) benchmark::DoNotOptimize(is_irreducible(c));
}

} // namespace

BENCHMARK(BM_RankSerial)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Phi4RankSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Phi4RankParallel)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_IrreducibleSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IrreducibleParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
