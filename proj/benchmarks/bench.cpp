#include <benchmark/benchmark.h>

#include "k3cliff/certificate.hpp"

using namespace k3cliff;

static void BM_MinusTwoBruteforce(benchmark::State& state) {
    auto p = new_params(2 * state.range(0) + 20, state.range(0), Regime::Base);
    for (auto _ : state)
        benchmark::DoNotOptimize(minus_two_bruteforce(p, std::max<Int>(1, p.d - 6)));
}
BENCHMARK(BM_MinusTwoBruteforce)->Arg(0)->Arg(10)->Arg(30);

static void BM_MinCliffordPencil(benchmark::State& state) {
    auto p = new_params(2 * state.range(0) + 14, state.range(0), Regime::Theorem);
    for (auto _ : state) benchmark::DoNotOptimize(min_clifford_pencil(p));
}
BENCHMARK(BM_MinCliffordPencil)->Arg(0)->Arg(10)->Arg(30);

static void BM_AmpleCertificate(benchmark::State& state) {
    auto p = new_params(20, 3, Regime::Base);
    for (auto _ : state)
        benchmark::DoNotOptimize(ample_certificate(p, state.range(0)));
}
BENCHMARK(BM_AmpleCertificate)->Arg(25)->Arg(50)->Arg(100);

static void BM_BuildCertificate(benchmark::State& state) {
    CertifyOptions opts;
    opts.with_timestamp = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(build_certificate(2 * state.range(0) + 14, state.range(0), opts));
}
BENCHMARK(BM_BuildCertificate)->Arg(0)->Arg(10)->Arg(30);

BENCHMARK_MAIN();
