// Serial reference against the OpenMP kernels.
#include "gwp1/correlators/correlators.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace gwp1;

static void closed_form(benchmark::State& st, Exec mode) {
    int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(closed_form_M(N, mode));
    st.counters["threads"] = mode == Exec::parallel ? omp_get_max_threads() : 1;
}

static void fk(benchmark::State& st, Exec mode) {
    int N = static_cast<int>(st.range(0));
    FkOptions opt;
    opt.exec = mode;
    for (auto _ : st) benchmark::DoNotOptimize(f_k_series(3, {N, N, N}, opt));
    st.counters["threads"] = mode == Exec::parallel ? omp_get_max_threads() : 1;
}

BENCHMARK_CAPTURE(closed_form, serial, Exec::serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closed_form, parallel, Exec::parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(fk, serial, Exec::serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(fk, parallel, Exec::parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
