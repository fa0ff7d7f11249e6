#include <benchmark/benchmark.h>

#include "hypercert/hypergeom.hpp"

namespace {

using hypercert::HypergeomParams;

void BM_Gauss2F1(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0)) / 100.0;
  const HypergeomParams p{0.7, -1.3, 2.4};
  const std::complex<double> z = std::polar(r, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(hypercert::gauss_2f1(p, z));
}
BENCHMARK(BM_Gauss2F1)->Arg(10)->Arg(50)->Arg(90)->Arg(99);

// Large terms force the __float128 path.
void BM_Gauss2F1Extended(benchmark::State& state) {
  const HypergeomParams p{4.8, 4.6, -2.05};
  const std::complex<double> z = std::polar(0.9, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(hypercert::gauss_2f1(p, z));
}
BENCHMARK(BM_Gauss2F1Extended);

void BM_NormalizedF(benchmark::State& state) {
  const HypergeomParams p{-3, 1, 10};
  const std::complex<double> z = std::polar(0.95, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(hypercert::normalized_f(p, z));
}
BENCHMARK(BM_NormalizedF);

}  // namespace
