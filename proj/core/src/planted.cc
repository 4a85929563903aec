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

#include "duolouvain/planted.h"

#include <numeric>
#include <string>

#include "duolouvain/errors.h"
#include "duolouvain/random.h"

namespace duolouvain {
namespace {

constexpr std::array<EdgeProbabilities, kParameterLabels> kParameterTable = {{
    {0.45, 0.016},
    {0.4, 0.033},
    {0.35, 0.05},
    {0.325, 0.058},
    {0.3, 0.066},
    {0.275, 0.075},
    {0.25, 0.083},
    {0.225, 0.091},
    {0.2, 0.1},
}};

bool IsProbability(double p) { return p >= 0.0 && p <= 1.0; }

std::vector<std::size_t> BlockLabels(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> labels;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    labels.insert(labels.end(), sizes[b], b);
  }
  return labels;
}

}  // namespace

PlantedGraph PlantedPartitionGraph(std::span<const std::size_t> sizes,
                                   double p_in, double p_out,
                                   std::uint64_t seed) {
  if (sizes.empty()) throw InputError("planted partition needs block sizes");
  for (std::size_t s : sizes) {
    if (s == 0) throw InputError("planted blocks must be nonempty");
  }
  if (!IsProbability(p_in) || !IsProbability(p_out)) {
    throw InputError("edge probabilities must lie in [0, 1]");
  }
  const std::vector<std::size_t> labels = BlockLabels(sizes);
  const std::size_t n = labels.size();
  if (n < 2) throw InputError("planted partition needs at least two nodes");

  Rng rng = MakeRng(seed);
  WeightedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = labels[i] == labels[j] ? p_in : p_out;
      if (Uniform01(rng) < p) g.Set(i, j, 1.0);
    }
  }
  return {std::move(g), Partition::FromLabels(labels)};
}

EdgeProbabilities ParameterRow(int label) {
  if (label < 1 || label > kParameterLabels) {
    throw InputError("parameter label must be in 1.." +
                     std::to_string(kParameterLabels) + ", got " +
                     std::to_string(label));
  }
  return kParameterTable[static_cast<std::size_t>(label - 1)];
}

std::size_t BenchmarkSpec::node_count() const {
  return std::accumulate(graph_sizes.begin(), graph_sizes.end(),
                         std::size_t{0});
}

void ValidateSpec(const BenchmarkSpec& spec) {
  if (spec.graph_sizes.empty() || spec.relation_sizes.empty()) {
    throw InputError("benchmark needs graph and relation block sizes");
  }
  const std::size_t graph_n = spec.node_count();
  const std::size_t relation_n =
      std::accumulate(spec.relation_sizes.begin(), spec.relation_sizes.end(),
                      std::size_t{0});
  if (graph_n != relation_n) {
    throw InputError("graph blocks cover " + std::to_string(graph_n) +
                     " nodes but relation blocks cover " +
                     std::to_string(relation_n));
  }
  for (double p : {spec.graph_probabilities.alpha,
                   spec.graph_probabilities.beta,
                   spec.relation_probabilities.alpha,
                   spec.relation_probabilities.beta}) {
    if (!IsProbability(p)) {
      throw InputError("benchmark probabilities must lie in [0, 1]");
    }
  }
}

BenchmarkSpec CaseSpec(int case_id, int graph_label, int relations_label,
                       std::uint64_t seed) {
  BenchmarkSpec spec;
  spec.case_id = case_id;
  spec.graph_label = graph_label;
  spec.relations_label = relations_label;
  spec.seed = seed;
  switch (case_id) {
    case 1:
      spec.graph_sizes = {128, 128};
      spec.relation_sizes = {64, 64, 64, 64};
      break;
    case 2:
      spec.graph_sizes = {64, 64, 64, 64};
      spec.relation_sizes = std::vector<std::size_t>(8, 32);
      break;
    case 3:
      spec.graph_sizes = {128, 128};
      spec.relation_sizes = {43, 42, 43, 96, 32};
      break;
    case 4:
      spec.graph_sizes = {64, 64, 64, 64};
      spec.relation_sizes = {40, 24, 64, 21, 22, 21, 32, 32};
      break;
    default:
      throw InputError("benchmark case must be in 1..4, got " +
                       std::to_string(case_id));
  }
  spec.graph_probabilities = ParameterRow(graph_label);
  spec.relation_probabilities = ParameterRow(relations_label);
  return spec;
}

BenchmarkInstance GenerateInstance(const BenchmarkSpec& spec) {
  ValidateSpec(spec);
  const auto& gp = spec.graph_probabilities;
  const auto& rp = spec.relation_probabilities;
  PlantedGraph graph = PlantedPartitionGraph(spec.graph_sizes, gp.alpha,
                                             gp.beta, MixSeed(spec.seed ^ 1));
  PlantedGraph positive = PlantedPartitionGraph(
      spec.relation_sizes, rp.alpha, rp.beta, MixSeed(spec.seed ^ 2));
  PlantedGraph negative = PlantedPartitionGraph(
      spec.relation_sizes, rp.beta, rp.alpha, MixSeed(spec.seed ^ 3));
  return {std::move(graph.graph), std::move(negative.graph),
          std::move(positive.graph), std::move(positive.blocks),
          std::move(graph.blocks)};
}

}  // namespace duolouvain
