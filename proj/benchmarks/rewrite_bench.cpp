// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "reltrs/analysis.hpp"
#include "reltrs/rewrite.hpp"
#include "reltrs/termrel.hpp"

using namespace reltrs;

static void BM_Reachable(benchmark::State& state) {
  Trs trs = arithmetic_trs();
  auto seeds = terms_up_to_depth(trs.signature, {}, static_cast<unsigned>(state.range(0)));
  auto kind = static_cast<StepKind>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reachable(trs, seeds, kind));
}
BENCHMARK(BM_Reachable)
    ->ArgsProduct({{2, 3}, {static_cast<int>(StepKind::Seq),
                            static_cast<int>(StepKind::Par),
                            static_cast<int>(StepKind::Full)}})
    ->Unit(benchmark::kMillisecond);

static void BM_ParallelClosure(benchmark::State& state) {
  Trs trs = arithmetic_trs();
  auto c = make_term_carrier({trs.signature, trs.variables, 1, 2});
  Rel rt = ground_instances(trs, c);
  for (auto _ : state) benchmark::DoNotOptimize(parallel_closure(rt));
}
BENCHMARK(BM_ParallelClosure)->Unit(benchmark::kMillisecond);

static void BM_FullClosure(benchmark::State& state) {
  Trs trs = arithmetic_trs();
  auto c = make_term_carrier({trs.signature, trs.variables, 1, 2});
  Rel rt = ground_instances(trs, c);
  for (auto _ : state) benchmark::DoNotOptimize(full_closure(rt));
}
BENCHMARK(BM_FullClosure)->Unit(benchmark::kMillisecond);

static void BM_SubstRel(benchmark::State& state) {
  Trs trs = arithmetic_trs();
  auto c = make_term_carrier({trs.signature, trs.variables, 1, 2});
  Rel rules = rules_relation(trs, c);
  Rel rt = ground_instances(trs, c);
  for (auto _ : state) benchmark::DoNotOptimize(subst_rel(rules, rt));
}
BENCHMARK(BM_SubstRel)->Unit(benchmark::kMillisecond);

static void BM_Spectrum(benchmark::State& state) {
  Trs trs = arithmetic_trs();
  auto seeds = terms_up_to_depth(trs.signature, {}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_spectrum(trs, seeds));
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
