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

// The eight-person example: a graph of two 4-cycles joined by one edge, and
// two sources of relations between the people (personal and working).
#ifndef DUOLOUVAIN_TESTS_EIGHT_PEOPLE_H_
#define DUOLOUVAIN_TESTS_EIGHT_PEOPLE_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "duolouvain/bipolar_graph.h"
#include "duolouvain/weighted_graph.h"

namespace duolouvain::testing {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

// 1-based pairs to a 0/1 matrix on 8 nodes.
inline WeightedGraph Indicator(const Pairs& pairs) {
  WeightedGraph g(8);
  for (auto [i, j] : pairs) g.Set(i - 1, j - 1, 1.0);
  return g;
}

inline WeightedGraph ExampleGraph() {
  return Indicator({{1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 6},
                    {5, 6}, {5, 8}, {6, 7}, {7, 8}});
}

// Personal relations: enemies and old friends.
inline WeightedGraph PersonalNegative() { return Indicator({{1, 4}, {6, 8}}); }
inline WeightedGraph PersonalPositive() {
  return Indicator({{1, 2}, {3, 4}, {5, 6}});
}
// Working relations: opposed interests and a tight association.
inline WeightedGraph WorkingNegative() {
  return Indicator({{1, 3}, {2, 4}, {5, 7}, {6, 7}});
}
inline WeightedGraph WorkingPositive() { return Indicator({{7, 8}}); }

inline BipolarMultiGraph ExampleRelations() {
  return {{PersonalNegative(), WorkingNegative()},
          {PersonalPositive(), WorkingPositive()}};
}

// max / max / min, standard negation, M = A/2 + F_b/2.
inline PipelineConfig ExampleConfig() {
  PipelineConfig config;
  config.aggregate_negative = AggregatorSpec::Max();
  config.aggregate_positive = AggregatorSpec::Max();
  config.combine = AggregatorSpec::Min();
  config.graph_weight = 0.5;
  return config;
}

}  // namespace duolouvain::testing

#endif  // DUOLOUVAIN_TESTS_EIGHT_PEOPLE_H_
