#include <random>

#include <benchmark/benchmark.h>

#include "gaussify/kernels.hpp"

namespace k = gaussify::kernels;

namespace {

Eigen::MatrixXcd random_state(int cutoff, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(cutoff + 1, cutoff + 1);
  for (int i = 0; i <= cutoff; ++i)
    for (int j = 0; j <= cutoff; ++j) a(i, j) = {g(rng), g(rng)};
  return a / a.norm();
}

Eigen::MatrixXcd random_density(int cutoff, unsigned seed) {
  const Eigen::MatrixXcd a = random_state(cutoff, seed);
  const Eigen::Map<const Eigen::VectorXcd> v(a.data(), a.size());
  return v * v.adjoint();
}

void BM_PairProductSerial(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const Eigen::MatrixXcd a = random_state(c, 1);
  for (auto _ : st) benchmark::DoNotOptimize(k::pair_product_serial(a, a, 2 * c));
}

void BM_PairProductOmp(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const Eigen::MatrixXcd a = random_state(c, 1);
  for (auto _ : st) benchmark::DoNotOptimize(k::pair_product(a, a, 2 * c));
}

void BM_MixedSerial(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const Eigen::MatrixXcd rho = random_density(c, 2);
  for (auto _ : st) benchmark::DoNotOptimize(k::mixed_pair_product_serial(rho, c, 2 * c));
}

void BM_MixedOmp(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const Eigen::MatrixXcd rho = random_density(c, 2);
  for (auto _ : st) benchmark::DoNotOptimize(k::mixed_pair_product(rho, c, 2 * c));
}

}  // namespace

BENCHMARK(BM_PairProductSerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PairProductOmp)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MixedSerial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MixedOmp)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
