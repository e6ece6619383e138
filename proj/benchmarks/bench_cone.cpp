#include <benchmark/benchmark.h>

#include "dporders/fixtures.hpp"
#include "dporders/positivity.hpp"

namespace {

using namespace dporders;

OrderData blown_cubic(int k) {
    OrderData o = FixtureCatalog::get("p2-cubic-e2");
    for (int i = 0; i < k; ++i) {
        BlowupPoint p{"p" + std::to_string(i), kBaseParent, true, false, {{"c", 1}}};
        o = blowup_order(o, p);
    }
    return o;
}

void bm_generators_only(benchmark::State& state) {
    const OrderData o = blown_cubic(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(effective_cone_generators(o));
}
BENCHMARK(bm_generators_only)->Arg(2)->Arg(5)->Arg(8);

// Full cone including the numeric candidate scan over low-degree classes.
void bm_cone_with_scan(benchmark::State& state) {
    const OrderData o = blown_cubic(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(effective_cone(o));
}
BENCHMARK(bm_cone_with_scan)->Arg(2)->Arg(5)->Arg(8);

void bm_predicates(benchmark::State& state) {
    const OrderData o = blown_cubic(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_del_pezzo(o));
        benchmark::DoNotOptimize(is_almost_del_pezzo(o));
        benchmark::DoNotOptimize(is_minimal(o));
    }
}
BENCHMARK(bm_predicates)->Arg(2)->Arg(5)->Arg(8);

void bm_run_mmp(benchmark::State& state) {
    const OrderData o = blown_cubic(8);
    for (auto _ : state) benchmark::DoNotOptimize(run_mmp(o));
}
BENCHMARK(bm_run_mmp);

} // namespace
