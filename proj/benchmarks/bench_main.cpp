// Microbenchmarks for the hot kernels. Run ./rootgap_bench --benchmark_filter=...
#include <benchmark/benchmark.h>

#include "rootgap/bump.hpp"
#include "rootgap/fixedpoint.hpp"
#include "rootgap/fourier.hpp"

namespace {

void BM_FracSqrt(benchmark::State& state) {
  rootgap::u64 n = 123456789012345ull;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootgap::frac_sqrt(n));
    n += 2;
  }
}
BENCHMARK(BM_FracSqrt);

void BM_BumpValue(benchmark::State& state) {
  rootgap::TestFunctionSet tf = rootgap::make_test_functions(2.0, 1.0 / 200.0);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tf.V.value(1.0 + x));
    x = x < 1.0 ? x + 1e-6 : 0.0;
  }
}
BENCHMARK(BM_BumpValue);

void BM_FourierTransform(benchmark::State& state) {
  rootgap::TestFunctionSet tf = rootgap::make_test_functions(2.0, 1.0 / 200.0);
  double xi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootgap::fourier_transform(tf.V, xi));
    xi = xi < 40.0 ? xi + 0.37 : 0.0;
  }
}
BENCHMARK(BM_FourierTransform);

}  // namespace

BENCHMARK_MAIN();
