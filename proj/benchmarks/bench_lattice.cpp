#include <benchmark/benchmark.h>

#include "dporders/fixtures.hpp"
#include "dporders/order.hpp"

namespace {

using namespace dporders;

// Chain of k smooth-on-D blowups of the degree-3 order over P2.
OrderData blown_cubic(int k) {
    OrderData o = FixtureCatalog::get("p2-cubic-e2");
    for (int i = 0; i < k; ++i) {
        BlowupPoint p{"p" + std::to_string(i), kBaseParent, true, false, {{"c", 1}}};
        o = blowup_order(o, p);
    }
    return o;
}

void bm_intersection(benchmark::State& state) {
    const OrderData o = blown_cubic(static_cast<int>(state.range(0)));
    const DivisorClass k = canonical_class(o.surface());
    const DivisorClass d = o.component_class(o.components().front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect(k, d));
        benchmark::DoNotOptimize(intersect(d, d));
    }
}
BENCHMARK(bm_intersection)->Arg(1)->Arg(4)->Arg(8);

void bm_blowup_order(benchmark::State& state) {
    const OrderData o = blown_cubic(static_cast<int>(state.range(0)));
    const BlowupPoint p{"q", kBaseParent, true, false, {{"c", 1}}};
    for (auto _ : state) benchmark::DoNotOptimize(blowup_order(o, p));
}
BENCHMARK(bm_blowup_order)->Arg(1)->Arg(4)->Arg(8);

void bm_k_squared(benchmark::State& state) {
    const OrderData o = blown_cubic(8);
    for (auto _ : state) benchmark::DoNotOptimize(k_squared(o));
}
BENCHMARK(bm_k_squared);

} // namespace
