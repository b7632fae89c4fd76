#include <benchmark/benchmark.h>

#include "splitspin/engines.hpp"

using namespace splitspin;

namespace {
const seq_spec<big_int> pad = seq_spec<big_int>::padovan();
}

static void BM_term_iter(benchmark::State& state) {
    const index_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(spinor_term_iter(pad, n));
}
BENCHMARK(BM_term_iter)->Arg(64)->Arg(1024)->Arg(16384)->Arg(262144);

static void BM_term_matpow(benchmark::State& state) {
    const index_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(term_matpow(pad, n));
}
BENCHMARK(BM_term_matpow)->Arg(64)->Arg(1024)->Arg(16384)->Arg(262144)->Arg(1 << 20);

static void BM_term_det_banded(benchmark::State& state) {
    const index_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(term_det_banded(pad, n));
}
BENCHMARK(BM_term_det_banded)->Arg(64)->Arg(512)->Arg(2000);

static void BM_term_det_cereceda(benchmark::State& state) {
    // classic seeds are null-cone instances; the timing uses an invertible one
    const auto custom = seq_spec<big_int>::custom({big_int(2), big_int(1), big_int(3)});
    const index_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(term_det_cereceda(custom, n));
}
BENCHMARK(BM_term_det_cereceda)->Arg(64)->Arg(512)->Arg(2000);

static void BM_term_binet(benchmark::State& state) {
    const index_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(spinor_term_binet(pad, n));
}
BENCHMARK(BM_term_binet)->Arg(10)->Arg(30);

static void BM_gf_prefix(benchmark::State& state) {
    const index_t count = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(gf_coefficients(pad, count));
}
BENCHMARK(BM_gf_prefix)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_identity_audit(benchmark::State& state) {
    const index_t n_max = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(identity_audit(n_max));
}
BENCHMARK(BM_identity_audit)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
