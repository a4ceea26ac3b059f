#include "lagc/complement.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lagc;

void BM_SymmetricEigen(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    Matrix S = random_symmetric(n, 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(symmetric_eigen(S));
}
BENCHMARK(BM_SymmetricEigen)->Arg(20)->Arg(50)->Arg(100);

void BM_PairComplementGeneral(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    auto space = standard_space(n);
    auto L = random_lagrangian(space, 1);
    auto Lp = random_lagrangian(space, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_complement_general(L, Lp));
}
BENCHMARK(BM_PairComplementGeneral)->Arg(5)->Arg(10)->Arg(20);

void BM_FamilyComplement(benchmark::State& state) {
    const auto members = static_cast<std::size_t>(state.range(0));
    auto space = standard_space(10);
    std::vector<Lagrangian> family;
    for (std::size_t i = 0; i < members; ++i)
        family.push_back(random_lagrangian(space, i + 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(family_complement(family));
}
BENCHMARK(BM_FamilyComplement)->Arg(4)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
