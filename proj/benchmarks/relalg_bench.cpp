// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "reltrs/laws.hpp"
#include "reltrs/relalg.hpp"

using namespace reltrs;

namespace {

Rel sample(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_relation(Carrier::range(n), density, rng);
}

}  // namespace

static void BM_Compose(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Rel a = sample(n, 0.05, 1);
  Rel b = sample(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Compose)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_Converse(benchmark::State& state) {
  Rel a = sample(static_cast<std::size_t>(state.range(0)), 0.05, 3);
  for (auto _ : state) benchmark::DoNotOptimize(converse(a));
}
BENCHMARK(BM_Converse)->RangeMultiplier(4)->Range(16, 4096);

// Sparse relations need many doubling rounds; dense ones saturate quickly.
static void BM_KleeneStar(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Rel a = sample(n, 1.5 / static_cast<double>(n), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kleene_star(a));
}
BENCHMARK(BM_KleeneStar)->RangeMultiplier(4)->Range(16, 4096);

static void BM_ResidualLeft(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Rel a = sample(n, 0.1, 5);
  Rel b = sample(n, 0.1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(residual_left(a, b));
}
BENCHMARK(BM_ResidualLeft)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
