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

#include "duolouvain/reproduce.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "duolouvain/community.h"
#include "duolouvain/errors.h"
#include "duolouvain/metrics.h"

namespace duolouvain {

std::uint64_t CellSeed(std::uint64_t base_seed, int graph_label,
                       int relations_label, std::size_t iteration) {
  return base_seed +
         10000 * static_cast<std::uint64_t>(graph_label * kParameterLabels +
                                            relations_label) +
         iteration;
}

double RunIteration(int case_id, int graph_label, int relations_label,
                    std::uint64_t seed, const PipelineConfig& config) {
  const BenchmarkInstance instance =
      GenerateInstance(CaseSpec(case_id, graph_label, relations_label, seed));
  const BipolarMultiGraph relations{{instance.negative}, {instance.positive}};
  LouvainOptions options;
  options.seed = seed;
  const BipolarDetection out =
      MultipleBipolarDuoLouvain(instance.graph, relations, config, options);
  return NormalizedMutualInformation(out.detection.partition, instance.gold);
}

double CellMeanNmi(const ReproductionOptions& options, int graph_label,
                   int relations_label) {
  if (options.iterations == 0) throw InputError("iterations must be positive");
  double sum = 0.0;
  for (std::size_t it = 0; it < options.iterations; ++it) {
    sum += RunIteration(
        options.case_id, graph_label, relations_label,
        CellSeed(options.base_seed, graph_label, relations_label, it),
        options.config);
  }
  return sum / static_cast<double>(options.iterations);
}

NmiTable Reproduce(const ReproductionOptions& options,
                   const CellCallback& on_cell) {
  CaseSpec(options.case_id, 1, 1, 0);  // validates the case id
  ValidateConfig(options.config);
  if (options.iterations == 0) throw InputError("iterations must be positive");

  constexpr int kCells = kParameterLabels * kParameterLabels;
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, kCells);

  NmiTable table{};
  std::atomic<int> next{0};
  std::mutex report;
  std::exception_ptr failure;
  auto worker = [&] {
    for (int cell = next++; cell < kCells; cell = next++) {
      const int g = cell / kParameterLabels + 1;
      const int r = cell % kParameterLabels + 1;
      try {
        const double mean = CellMeanNmi(options, g, r);
        table[g - 1][r - 1] = mean;
        std::lock_guard lock(report);
        if (on_cell) on_cell(g, r, mean);
      } catch (...) {
        std::lock_guard lock(report);
        if (!failure) failure = std::current_exception();
        next = kCells;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

}  // namespace duolouvain
