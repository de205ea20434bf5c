// has_rlp against its serial reference on a few fibrancy workloads.
#include <benchmark/benchmark.h>

#include "sset/shapes.hpp"

using namespace sset;

namespace {

struct Workload {
    SP X;
    std::vector<NamedInclusion> family;
};

Workload workload(int which) {
    FamilyBounds b{3, 7, 4};
    switch (which) {
        case 0: return {nerve(poset_n(3), 4), horn_family(4, true)};
        case 1: return {resolve("Lambda(2,1)").obj, named_family("special-horns", b)};
        default: return {resolve("dom:aug_horn(3,1,1;K)").obj, named_family("J-aug-horns", b)};
    }
}

void BM_parallel(benchmark::State& st) {
    auto w = workload(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(has_rlp(w.X, w.family).entries.size());
}

void BM_serial(benchmark::State& st) {
    auto w = workload(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(has_rlp_serial(w.X, w.family).entries.size());
}

}  // namespace

BENCHMARK(BM_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
