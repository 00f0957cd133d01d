#include <benchmark/benchmark.h>

#include "risemf/association.hpp"
#include "risemf/channel.hpp"
#include "risemf/model.hpp"
#include "risemf/numerics.hpp"

using namespace risemf;

static void BM_ula_gain(benchmark::State& state) {
  double d = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ula_gain(d, 8));
    d += 1e-9;
  }
}
BENCHMARK(BM_ula_gain);

static void BM_beam_gain_pmf_cached(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(beam_gain_pmf(8, 0.7071067811865476));
}
BENCHMARK(BM_beam_gain_pmf_cached);

static void BM_cascade_existence(benchmark::State& state) {
  NetworkParams p;
  auto dc = derive_constants(p);
  double t = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade_existence(t, p, dc));
    t = (t < 300) ? t + 1 : 50;  // defeat the per-t_bu cache
  }
}
BENCHMARK(BM_cascade_existence);

static void BM_expint(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expint_En(1.09, x));
    x = (x < 5) ? x + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_expint);

BENCHMARK_MAIN();
