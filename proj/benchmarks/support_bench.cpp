#include <random>

#include <benchmark/benchmark.h>

#include "radon/geometry/support.hpp"

using namespace radon::geometry;

namespace {

void BM_PolarDual(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto p = random_polygon(rng);
  for (auto _ : state) benchmark::DoNotOptimize(polar_dual(p));
}
BENCHMARK(BM_PolarDual);

void BM_LineIntegral(benchmark::State& state) {
  const auto f = PlanarBump::annulus(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(f.line_integral({0.7, 0.1}));
}
BENCHMARK(BM_LineIntegral);

void BM_ZeroComponent(benchmark::State& state) {
  const auto f = PlanarBump::annulus(1, 2);
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zero_component_check(f, h).hausdorff);
}
BENCHMARK(BM_ZeroComponent)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
