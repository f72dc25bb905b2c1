// Copyright 2026 The combchoice Authors.
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

#include "combchoice/generators.h"
#include "combchoice/lattice.h"

namespace combchoice {
namespace {

ChoiceFunction PathIndependent(int n) {
  Rng rng(static_cast<std::uint64_t>(n) * 31);
  return RandomPathIndependent(GroundSet::Numbered(n), rng);
}

void BM_MaximalFamily(benchmark::State& state) {
  const ChoiceFunction c = PathIndependent(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeMaximalFamily(c).sets.size());
  }
}
BENCHMARK(BM_MaximalFamily)->DenseRange(4, 12, 4);

void BM_MaximalMcRationalization(benchmark::State& state) {
  const ChoiceFunction c = PathIndependent(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaximalMcRationalization(c).orders.size());
  }
}
BENCHMARK(BM_MaximalMcRationalization)->DenseRange(3, 7, 2);

void BM_MinMcSize(benchmark::State& state) {
  const ChoiceFunction c = PathIndependent(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MinMcSize(c));
}
BENCHMARK(BM_MinMcSize)->DenseRange(3, 5, 1);

}  // namespace
}  // namespace combchoice
