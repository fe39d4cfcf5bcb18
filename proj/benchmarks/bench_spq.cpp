// Copyright 2026 The spq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "spq/alt_chain.hpp"
#include "spq/braid_checks.hpp"
#include "spq/catalog.hpp"
#include "spq/enumerator.hpp"
#include "spq/exact_arith.hpp"
#include "spq/flag_oracle.hpp"
#include "spq/quotient_filter.hpp"

namespace {

void BM_Cyclotomic(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spq::cyclotomic(d));
}
BENCHMARK(BM_Cyclotomic)->Arg(12)->Arg(105)->Arg(360);

// x^n - 1 expanded and factored back.
void BM_FactorBinomial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const spq::IntPoly p = spq::expand(spq::binomial_factorization(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(spq::factor_cyclotomic(p));
}
BENCHMARK(BM_FactorBinomial)->Arg(12)->Arg(30)->Arg(60);

void BM_Enumerate(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  const spq::BigInt bound = spq::sp_order(g);
  for (auto _ : state) benchmark::DoNotOptimize(spq::enumerate_simple_below(bound, spq::kPipelineQLimit));
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 10, 1)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spq::run_pipeline(g));
}
BENCHMARK(BM_Pipeline)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AltChainExact(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spq::verify_alt_chain(g, {.exact_factorial = true}));
}
BENCHMARK(BM_AltChainExact)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FlagScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spq::flag_scan(n, q));
}
BENCHMARK(BM_FlagScan)->Args({3, 2})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_GoldenScan(benchmark::State& state) {
  const auto f = spq::FiniteField::get(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(spq::golden_braid_scan(f));
}
BENCHMARK(BM_GoldenScan)->Args({5, 1})->Args({7, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
