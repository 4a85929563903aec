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

// Averaged NMI grids over the nine parameter labels for one benchmark
// case, as produced by the `reproduce` subcommand.
#ifndef DUOLOUVAIN_REPRODUCE_H_
#define DUOLOUVAIN_REPRODUCE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "duolouvain/bipolar_graph.h"
#include "duolouvain/planted.h"

namespace duolouvain {

struct ReproductionOptions {
  int case_id = 1;
  std::size_t iterations = 100;
  std::uint64_t base_seed = 0;
  // Worker threads; 0 means one per hardware thread.
  unsigned threads = 1;
  // Phi- = Phi+ = mean, psi = min, standard negation, gamma = 0.
  PipelineConfig config;
};

// Seed of one iteration in one cell. Depends only on the position, so cells
// can be computed in any order.
std::uint64_t CellSeed(std::uint64_t base_seed, int graph_label,
                       int relations_label, std::size_t iteration);

// NMI against the gold partition for a single generated instance.
double RunIteration(int case_id, int graph_label, int relations_label,
                    std::uint64_t seed, const PipelineConfig& config);

double CellMeanNmi(const ReproductionOptions& options, int graph_label,
                   int relations_label);

// [graph_label - 1][relations_label - 1]
using NmiTable = std::array<std::array<double, kParameterLabels>,
                            kParameterLabels>;

// Called once per finished cell, possibly from worker threads but never
// concurrently.
using CellCallback = std::function<void(int graph_label, int relations_label,
                                        double mean_nmi)>;

NmiTable Reproduce(const ReproductionOptions& options,
                   const CellCallback& on_cell = {});

}  // namespace duolouvain

#endif  // DUOLOUVAIN_REPRODUCE_H_
