#include <benchmark/benchmark.h>

#include <random>

#include "gmalie/gmalie.hpp"

using namespace gmalie;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<F> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.random(rng);
  return m;
}

void BM_KernelPrime(benchmark::State& state) {
  PrimeField f(1'000'003);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(f, n / 2, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_of(m));
}
BENCHMARK(BM_KernelPrime)->Arg(32)->Arg(64)->Arg(128);

void BM_KernelRational(benchmark::State& state) {
  Rationals q;
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(q, n / 2, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_of(m));
}
BENCHMARK(BM_KernelRational)->Arg(16)->Arg(32);

void BM_DerivationSpace(benchmark::State& state) {
  Rationals q;
  auto alg = matrix_algebra(q, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(alg));
}
BENCHMARK(BM_DerivationSpace)->Arg(2)->Arg(3)->Arg(4);

void BM_NLieSpaceM3(benchmark::State& state) {
  PrimeField f(7);
  auto alg = matrix_algebra(f, 3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n_lie_derivation_space(alg, n));
}
BENCHMARK(BM_NLieSpaceM3)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
