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

#ifndef DUOLOUVAIN_PLANTED_H_
#define DUOLOUVAIN_PLANTED_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "duolouvain/partition.h"
#include "duolouvain/weighted_graph.h"

namespace duolouvain {

struct PlantedGraph {
  WeightedGraph graph;  // 0/1, symmetric, zero diagonal
  Partition blocks;
};

// Planted partition model: nodes are laid out consecutively in blocks of
// the given sizes, and every unordered pair is an edge independently with
// probability p_in inside a block and p_out across blocks.
PlantedGraph PlantedPartitionGraph(std::span<const std::size_t> sizes,
                                   double p_in, double p_out,
                                   std::uint64_t seed);

// Rows of the benchmark parameter table, labels 1..9. Each row keeps
// 64 * alpha + 192 * beta close to 32.
struct EdgeProbabilities {
  double alpha;  // within a block
  double beta;   // across blocks
};
inline constexpr int kParameterLabels = 9;
EdgeProbabilities ParameterRow(int label);

struct BenchmarkSpec {
  int case_id = 0;  // 1..4, or 0 for a custom layout
  int graph_label = 0;
  int relations_label = 0;
  std::vector<std::size_t> graph_sizes;
  std::vector<std::size_t> relation_sizes;
  EdgeProbabilities graph_probabilities{0.0, 0.0};
  // F+ uses (alpha, beta); F- uses the reversed pair (beta, alpha).
  EdgeProbabilities relation_probabilities{0.0, 0.0};
  std::uint64_t seed = 0;

  std::size_t node_count() const;
};

// Throws InputError unless both layouts are nonempty, cover the same number
// of nodes and every probability is in [0, 1].
void ValidateSpec(const BenchmarkSpec& spec);

// The four 256-node layouts:
//   1: graph (128, 128),     relations (64, 64, 64, 64)
//   2: graph (64, 64, 64, 64), relations 8 x 32
//   3: graph (128, 128),     relations (43, 42, 43, 96, 32)
//   4: graph (64, 64, 64, 64), relations (40, 24, 64, 21, 22, 21, 32, 32)
BenchmarkSpec CaseSpec(int case_id, int graph_label, int relations_label,
                       std::uint64_t seed);

struct BenchmarkInstance {
  WeightedGraph graph;     // A
  WeightedGraph negative;  // F-
  WeightedGraph positive;  // F+
  Partition gold;          // relation blocks
  Partition graph_blocks;
};

BenchmarkInstance GenerateInstance(const BenchmarkSpec& spec);

}  // namespace duolouvain

#endif  // DUOLOUVAIN_PLANTED_H_
