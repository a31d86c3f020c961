#include <benchmark/benchmark.h>

#include "conclab/conclab.hpp"

namespace {

using namespace conclab;

Decomposition padded_random(int d, int m) {
  const DensityMatrix rho = gen::random_density(Dims(d, d), std::min(m, d * d), 1);
  return pad(eig_decomposition(rho), m);
}

void BM_Preconcurrence(benchmark::State& state) {
  const Decomposition dec = padded_random(static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(preconcurrence(dec));
}
BENCHMARK(BM_Preconcurrence)->Args({2, 16})->Args({3, 9})->Args({3, 36});

void BM_BiconcurrenceOperator(benchmark::State& state) {
  const Decomposition dec = padded_random(static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(biconcurrence_operator(dec));
}
BENCHMARK(BM_BiconcurrenceOperator)->Args({2, 16})->Args({3, 9})->Args({3, 36});

void BM_ObjectiveDirect(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto b = biconcurrence_operator(padded_random(2, m));
  Rng rng(3);
  const MixingUnitary u(linalg::haar_unitary(m, rng));
  for (auto _ : state) benchmark::DoNotOptimize(objective(b, u).value);
}
BENCHMARK(BM_ObjectiveDirect)->Arg(4)->Arg(16);

void BM_ObjectiveFactored(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const QuarticObjective q(biconcurrence_operator(padded_random(2, m)));
  Rng rng(3);
  const CMatrix u = linalg::haar_unitary(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(q.value(u));
}
BENCHMARK(BM_ObjectiveFactored)->Arg(4)->Arg(16)->Arg(36);

void BM_AnalyticGradient(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const UnitaryObjective obj = biconcurrence_objective(biconcurrence_operator(padded_random(2, m)));
  Rng rng(4);
  const CMatrix u = linalg::haar_unitary(m, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemannian_gradient(obj, u, GradientMode::kAnalytic));
  }
}
BENCHMARK(BM_AnalyticGradient)->Arg(4)->Arg(16)->Arg(36);

void BM_TestSeparabilityWerner(benchmark::State& state) {
  const DensityMatrix rho = gen::werner2(0.5);
  OptimConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(test_separability(rho, cfg).best_value);
}
BENCHMARK(BM_TestSeparabilityWerner)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  const DensityMatrix rho = gen::random_density(Dims(3, 3), 2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_2q(rho, static_cast<int>(state.range(0)), 0));
  }
}
BENCHMARK(BM_Witness)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
