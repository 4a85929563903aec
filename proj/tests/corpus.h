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

// Random inputs shared by the property tests and the acceptance runner.
#ifndef DUOLOUVAIN_TESTS_CORPUS_H_
#define DUOLOUVAIN_TESTS_CORPUS_H_

#include <cstddef>
#include <random>
#include <vector>

#include "duolouvain/partition.h"
#include "duolouvain/weighted_graph.h"

namespace duolouvain::testing {

// Symmetric nonnegative weights with roughly `density` of the pairs set.
// Optionally places small self-loops, as a coarsened level would have.
// Always has positive total weight.
inline WeightedGraph RandomWeightedGraph(std::mt19937_64& rng, std::size_t n,
                                         double density,
                                         bool self_loops = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  WeightedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (self_loops && u(rng) < 0.3) g.Set(i, i, u(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (u(rng) < density) g.Set(i, j, 0.1 + u(rng));
    }
  }
  if (g.TotalWeight() == 0.0 && n >= 2) g.Set(0, 1, 1.0);
  return g;
}

// Unweighted variant.
inline WeightedGraph RandomBinaryGraph(std::mt19937_64& rng, std::size_t n,
                                       double density) {
  std::bernoulli_distribution edge(density);
  WeightedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) g.Set(i, j, 1.0);
    }
  }
  if (g.TotalWeight() == 0.0 && n >= 2) g.Set(0, 1, 1.0);
  return g;
}

inline std::vector<std::size_t> RandomLabels(std::mt19937_64& rng,
                                             std::size_t n, std::size_t k) {
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = pick(rng);
  return labels;
}

inline Partition RandomPartition(std::mt19937_64& rng, std::size_t n,
                                 std::size_t k) {
  return Partition::FromLabels(RandomLabels(rng, n, k));
}

inline std::vector<std::vector<double>> ToNested(const WeightedGraph& g) {
  std::vector<std::vector<double>> w(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    w[i].assign(g.row(i).begin(), g.row(i).end());
  }
  return w;
}

}  // namespace duolouvain::testing

#endif  // DUOLOUVAIN_TESTS_CORPUS_H_
