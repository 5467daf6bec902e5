// Copyright 2026 The twistgenus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <benchmark/benchmark.h>

#include "twistgenus/bounds.hpp"
#include "twistgenus/cg.hpp"
#include "twistgenus/pell.hpp"
#include "twistgenus/signatures.hpp"
#include "twistgenus/subgroup.hpp"

namespace twistgenus {
namespace {

void BM_TauTable(benchmark::State& state) {
  const TwistKnot k(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau_table(k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TauTable)->RangeMultiplier(8)->Range(8, 4096)->Complexity();

void BM_BoundReport(benchmark::State& state) {
  const TwistKnot k(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(k, 1));
}
BENCHMARK(BM_BoundReport)->Arg(5)->Arg(200)->Arg(5000);

void BM_SubspaceSumDirect(benchmark::State& state) {
  const TwistKnot k(200);
  for (auto _ : state) benchmark::DoNotOptimize(subspace_sum_direct(k, 89));
}
BENCHMARK(BM_SubspaceSumDirect);

void BM_ExhaustiveSearch(benchmark::State& state) {
  const TwistKnot k(state.range(0));
  const std::int64_t bound = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(k, bound));
}
BENCHMARK(BM_ExhaustiveSearch)
    ->Args({51, 20})
    ->Args({5, 8})
    ->Args({5, 16})
    ->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
  const std::uint64_t values[] = {801, 1000003ULL * 1000033ULL, 18446744073709551557ULL,
                                  4294967291ULL * 4294967279ULL};
  const std::uint64_t v = values[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(factorize(v));
}
BENCHMARK(BM_Factorize)->DenseRange(0, 3);

void BM_NegativePell(benchmark::State& state) {
  const auto D = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_negative_pell(D));
}
BENCHMARK(BM_NegativePell)->Arg(13)->Arg(421)->Arg(1000037)->Arg(100000037);

void BM_GenericSignature(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  const SeifertMatrix A = torus_knot_seifert_matrix(q);
  const RationalAngle angle(q / 2, 2 * q - 1);
  for (auto _ : state) benchmark::DoNotOptimize(lt_signature_generic(A, angle));
}
BENCHMARK(BM_GenericSignature)->Arg(5)->Arg(21)->Arg(81);

}  // namespace
}  // namespace twistgenus

BENCHMARK_MAIN();
