// Serial reference kernels against their OpenMP counterparts.
#include "halfcube/complex.hpp"
#include "halfcube/integer_matrix.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace halfcube;

namespace {

const CellComplex& complex_for(int n)
{
    static std::map<int, CellComplex> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_complex(n, n + 1)).first;
    return it->second;
}

const BoundaryMatrix& boundary_for(int n, int degree)
{
    static std::map<std::pair<int, int>, BoundaryMatrix> cache;
    auto it = cache.find({n, degree});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(n, degree), serial::assemble_boundary(complex_for(n), degree)).first;
    return it->second;
}

void BM_AssembleSerial(benchmark::State& state)
{
    const auto& c = complex_for(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::assemble_boundary(c, 3));
}

void BM_AssembleParallel(benchmark::State& state)
{
    const auto& c = complex_for(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel::assemble_boundary(c, 3));
}

void BM_RankModPSerial(benchmark::State& state)
{
    const auto& b = boundary_for(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::rank_mod_p(b, 3));
}

void BM_RankModPParallel(benchmark::State& state)
{
    const auto& b = boundary_for(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel::rank_mod_p(b, 3));
}

} // namespace

BENCHMARK(BM_AssembleSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankModPSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankModPParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
