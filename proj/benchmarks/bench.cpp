#include "isodeg/action.hpp"
#include "isodeg/catalog.hpp"
#include "isodeg/degrees.hpp"
#include "isodeg/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace isodeg;

static void BM_Fp2Generator(benchmark::State& state) {
    u64 p = state.range(0);
    FpElement eps = smallest_nonresidue(p);
    for (auto _ : state) benchmark::DoNotOptimize(fp2_generator(p, eps));
}
BENCHMARK(BM_Fp2Generator)->Arg(199)->Arg(1999)->Arg(9973);

static void BM_CartanClosure(benchmark::State& state) {
    u64 p = state.range(0);
    FpElement eps = smallest_nonresidue(p);
    Matrix gen = cartan_matrix(fp2_generator(p, eps));
    for (auto _ : state) benchmark::DoNotOptimize(closure({gen}));
}
BENCHMARK(BM_CartanClosure)->Arg(13)->Arg(31)->Arg(61);

static void BM_ProjPartition(benchmark::State& state) {
    u64 p = state.range(0);
    CatalogEntry entry = cns_plus_power(p, smallest_nonresidue(p), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(orbit_partition(entry.group, Space::ProjectiveLine));
}
BENCHMARK(BM_ProjPartition)->Arg(23)->Arg(199)->Arg(1999);

static void BM_DegreeReport(benchmark::State& state) {
    u64 p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(degree_lower_bound(p));
}
BENCHMARK(BM_DegreeReport)->Arg(23)->Arg(199)->Arg(1997);

static void BM_EnumerateGL2(benchmark::State& state) {
    u64 p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_gl2(p));
}
BENCHMARK(BM_EnumerateGL2)->Arg(13)->Arg(31);

BENCHMARK_MAIN();
