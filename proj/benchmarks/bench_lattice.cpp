#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "k3cliff/theorem.hpp"

using namespace k3cliff;

namespace {

std::vector<DivisorClass> random_classes(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> coord(-1000000, 1000000);
  std::vector<DivisorClass> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({Int(coord(rng)), Int(coord(rng))});
  return out;
}

void BM_Pairing(benchmark::State& state) {
  const SurfaceModel s = make_surface(60, 31);
  const auto classes = random_classes(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = classes[i % classes.size()];
    const auto& b = classes[(i + 1) % classes.size()];
    benchmark::DoNotOptimize(pairing(s, a, b));
    ++i;
  }
}
BENCHMARK(BM_Pairing);

void BM_CohomologyProfile(benchmark::State& state) {
  const SurfaceModel s = make_surface(60, 31);
  const auto classes = random_classes(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cohomology_profile(s, classes[i % classes.size()]));
    ++i;
  }
}
BENCHMARK(BM_CohomologyProfile);

void BM_BruteForce(benchmark::State& state) {
  const SurfaceModel s = make_surface(static_cast<long long>(state.range(0)), 2);
  const Int ys = safe_y_radius(s);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_clifford(s, 2, ys));
}
BENCHMARK(BM_BruteForce)->Arg(20)->Arg(40)->Arg(60);

void BM_RealizeClifford(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(realize_clifford(31, 7));
}
BENCHMARK(BM_RealizeClifford);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep(3, state.range(0)));
}
BENCHMARK(BM_Sweep)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
