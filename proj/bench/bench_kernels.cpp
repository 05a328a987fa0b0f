// Serial reference against OpenMP kernels on the two hot paths.

#include <benchmark/benchmark.h>

#include "corrdyn/correspondence.hpp"
#include "corrdyn/kernels.hpp"
#include "corrdyn/random.hpp"

using namespace corrdyn;

namespace {

Matrix<Rational> random_matrix(std::size_t n) {
  Rng rng(7, 0, n);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(50, 7);
  return m;
}

void BM_DeterminantSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::determinant_serial(m));
}

void BM_DeterminantParallel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::determinant_parallel(m));
}

std::pair<Correspondence, Correspondence> factors(unsigned d) {
  Rng rng(8, 0, d);
  return {rng.correspondence(d, d), rng.correspondence(d, d)};
}

void BM_ComposeSerial(benchmark::State& state) {
  const auto [f, g] = factors(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_serial(f, g));
}

void BM_ComposeParallel(benchmark::State& state) {
  const auto [f, g] = factors(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}

}  // namespace

BENCHMARK(BM_DeterminantSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ComposeSerial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeParallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
