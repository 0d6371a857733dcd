#include <benchmark/benchmark.h>

#include "polyideal/harness.hpp"

using namespace polyideal;

namespace {

void run(benchmark::State& state, const char* claim, bool parallel) {
    const auto& c = find_claim(claim);
    int n = int(state.range(0));
    enumerate_fixed(n);  // warm the enumeration cache outside the timed loop
    for (auto _ : state) {
        auto rep = batch_verify(c, n, {}, parallel);
        benchmark::DoNotOptimize(rep.rows.data());
    }
}

void BM_ladder_parallel(benchmark::State& s) { run(s, "lemma44-ladder", true); }
void BM_ladder_serial(benchmark::State& s) { run(s, "lemma44-ladder", false); }
void BM_thin_gb_parallel(benchmark::State& s) { run(s, "thm51-gb", true); }
void BM_thin_gb_serial(benchmark::State& s) { run(s, "thm51-gb", false); }

}  // namespace

BENCHMARK(BM_ladder_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ladder_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thin_gb_parallel)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thin_gb_serial)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
