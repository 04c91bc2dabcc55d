// Microbenchmarks for the hot paths: wall enumeration, line-bundle cohomology,
// the destabilizer search, and the full one-wall scenario. All inputs are
// small integers, so these mostly measure loop and map overhead.

#include <benchmark/benchmark.h>

#include "bnwall/cohomology.hpp"
#include "bnwall/crossing.hpp"
#include "bnwall/stability.hpp"
#include "bnwall/walls.hpp"

using namespace bnwall;

namespace {

void BM_EnumerateWalls(benchmark::State& state) {
    const Surface s = Surface::hirzebruch(1);
    const DivisorClass c1(1, 0);
    const i64 c2 = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_walls(s, c1, c2));
    }
}
BENCHMARK(BM_EnumerateWalls)->Arg(4)->Arg(16)->Arg(64);

void BM_CohomologySweep(benchmark::State& state) {
    const Surface s = Surface::hirzebruch(2);
    const i64 box = state.range(0);
    for (auto _ : state) {
        i64 acc = 0;
        for (i64 a = -box; a <= box; ++a)
            for (i64 b = -box; b <= box; ++b)
                acc += cohomology_line(s, DivisorClass(a, b)).h1;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CohomologySweep)->Arg(8)->Arg(16);

void BM_Destabilizers(benchmark::State& state) {
    const Surface s = Surface::hirzebruch(0);
    const i64 n = state.range(0);
    const DivisorClass c1(0, 2 * n - 1);
    const ExtensionData ext{DivisorClass(0, 0), c1, ZModel::generic(2 * n)};
    const DivisorClass l(1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(destabilizers(s, l, ext));
    }
}
BENCHMARK(BM_Destabilizers)->Arg(2)->Arg(5)->Arg(8);

void BM_Scenario(benchmark::State& state) {
    const i64 c2 = state.range(0);
    for (auto _ : state) {
        for (i64 n = 1; n < c2; ++n) {
            benchmark::DoNotOptimize(hirzebruch_scenario(1, 0, c2, n));
        }
    }
}
BENCHMARK(BM_Scenario)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
