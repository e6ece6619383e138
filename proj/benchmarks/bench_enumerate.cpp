#include <benchmark/benchmark.h>

#include "dporders/classify.hpp"

namespace {

using namespace dporders;

void bm_enumerate_p2(benchmark::State& state) {
    const int e_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_tdpo_p2(e_max));
}
BENCHMARK(bm_enumerate_p2)->Arg(6)->Arg(12);

void bm_enumerate_ruled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_tadpo_ruled(n));
}
BENCHMARK(bm_enumerate_ruled)->Arg(0)->Arg(1)->Arg(2);

} // namespace
