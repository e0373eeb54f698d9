#include <benchmark/benchmark.h>

#include <random>

#include "coble/coble.hpp"
#include "coble/dualscan.hpp"

using namespace coble;

namespace {

CobleParams<FiniteField> alpha_star(uint32_t p) {
  return CobleParams<FiniteField>::from_ints(FiniteField::prime(p), {4, -15, 7, 6, -3});
}

void BM_ExtensionMul(benchmark::State& state) {
  auto f = FiniteField::extension(static_cast<uint32_t>(state.range(0)), 2);
  std::mt19937_64 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = f->random(rng);
  Elem acc = f->one();
  for (auto _ : state) {
    for (auto x : xs) acc = f->mul(acc, x ? x : 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_ExtensionMul)->Arg(31)->Arg(10009);

void BM_CubicGradientEval(benchmark::State& state) {
  auto a = alpha_star(10009);
  auto grad = build_cubic(a).gradient();
  std::mt19937_64 rng(2);
  Point x(9);
  for (auto& c : x) c = a.f->random(rng);
  for (auto _ : state)
    for (auto& g : grad) benchmark::DoNotOptimize(g.evaluate(x));
}
BENCHMARK(BM_CubicGradientEval);

void BM_SampleCubic(benchmark::State& state) {
  auto G = build_cubic(alpha_star(10009));
  for (auto _ : state) benchmark::DoNotOptimize(sample_points(G, 100, 3));
}
BENCHMARK(BM_SampleCubic)->Unit(benchmark::kMillisecond);

void BM_NullspaceModp(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<uint64_t> a(n * n);
  for (auto& x : a) x = rng() % 10009;
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_modp(a, n, n, 10009));
}
BENCHMARK(BM_NullspaceModp)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_SegreSingularScan(benchmark::State& state) {
  auto S = segre_restriction(alpha_star(31));
  auto f = FiniteField::prime(31);
  for (auto _ : state) benchmark::DoNotOptimize(singular_scan(S, f));
}
BENCHMARK(BM_SegreSingularScan)->Unit(benchmark::kMillisecond);

void BM_SegreDual(benchmark::State& state) {
  auto S = segre_restriction(alpha_star(31));
  DualOptions o;
  o.d_max = 4;
  for (auto _ : state) benchmark::DoNotOptimize(dual_interpolate(S, o));
}
BENCHMARK(BM_SegreDual)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
