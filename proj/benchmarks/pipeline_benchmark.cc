// Copyright 2026 The duolouvain Authors.
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

#include <algorithm>
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "duolouvain/bipolar_graph.h"
#include "duolouvain/community.h"
#include "duolouvain/fuzzy_measure.h"
#include "duolouvain/metrics.h"
#include "duolouvain/planted.h"
#include "duolouvain/random.h"
#include "duolouvain/reproduce.h"

namespace duolouvain {
namespace {

void BM_LouvainPlanted(benchmark::State& state) {
  const auto instance = GenerateInstance(
      CaseSpec(1, static_cast<int>(state.range(0)), 1, 42));
  LouvainOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Louvain(instance.graph, options));
    ++options.seed;
  }
}
BENCHMARK(BM_LouvainPlanted)->DenseRange(1, 9, 4)->Unit(benchmark::kMillisecond);

void BM_BenchmarkIteration(benchmark::State& state) {
  const int case_id = static_cast<int>(state.range(0));
  PipelineConfig config;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunIteration(case_id, 5, 5, seed++, config));
  }
}
BENCHMARK(BM_BenchmarkIteration)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

FuzzyMeasure RandomMeasure(std::size_t n, std::uint64_t seed) {
  // Cumulative maxima over subsets keep the table monotone.
  auto rng = MakeRng(seed);
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> table(size);
  for (std::size_t s = 1; s + 1 < size; ++s) {
    double lo = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      if (s >> b & 1) lo = std::max(lo, table[s & ~(std::size_t{1} << b)]);
    }
    table[s] = lo + (1.0 - lo) * Uniform01(rng) * 0.5;
  }
  table[size - 1] = 1.0;
  return FuzzyMeasure::Explicit(n, std::move(table));
}

void BM_ExactShapley(benchmark::State& state) {
  const auto measure = RandomMeasure(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(ShapleyValues(measure));
}
BENCHMARK(BM_ExactShapley)->DenseRange(8, 16, 4);

void BM_AssociatedMatrix(benchmark::State& state) {
  const auto measure = RandomMeasure(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AssociatedMatrix(measure, AggregatorSpec::Mean()));
  }
}
BENCHMARK(BM_AssociatedMatrix)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Nmi(benchmark::State& state) {
  const auto a = GenerateInstance(CaseSpec(4, 1, 1, 1));
  const auto b = Louvain(a.graph).partition;
  for (auto _ : state) {
    benchmark::DoNotOptimize(NormalizedMutualInformation(a.gold, b));
  }
}
BENCHMARK(BM_Nmi);

}  // namespace
}  // namespace duolouvain
