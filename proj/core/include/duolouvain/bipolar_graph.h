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

#ifndef DUOLOUVAIN_BIPOLAR_GRAPH_H_
#define DUOLOUVAIN_BIPOLAR_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "duolouvain/aggregation.h"
#include "duolouvain/fuzzy_measure.h"
#include "duolouvain/weighted_graph.h"

namespace duolouvain {

// How Shapley values are obtained when building associated matrices.
struct ShapleyOptions {
  enum class Method { kExact, kSampled };
  Method method = Method::kExact;
  std::size_t samples = 100000;  // kSampled only
  std::uint64_t seed = 0;        // kSampled only
};

// The weighted graph associated with a measure. For i != j,
//
//   F[i][j] = symmetrize(Sh_i - Sh_i^j, Sh_j - Sh_j^i)
//
// where Sh^j are Shapley values of the game with j removed. Both differences
// are clamped into [0, 1] before aggregation; the diagonal is zero.
WeightedGraph AssociatedMatrix(const FuzzyMeasure& measure,
                               const AggregatorSpec& symmetrize,
                               const ShapleyOptions& options = {});

struct BipolarMatrices {
  WeightedGraph negative;
  WeightedGraph positive;
};

BipolarMatrices BipolarAssociated(const BipolarFuzzyMeasure& measure,
                                  const AggregatorSpec& symmetrize_negative,
                                  const AggregatorSpec& symmetrize_positive,
                                  const ShapleyOptions& options = {});

// A graph plus s >= 1 bipolar fuzzy measures over its nodes.
struct ExtendedMultipleBipolarFuzzyGraph {
  WeightedGraph graph;
  std::vector<BipolarFuzzyMeasure> measures;
};

// The 2s relation matrices (F-1..F-s, F+1..F+s) derived from the measures,
// or supplied directly.
struct BipolarMultiGraph {
  std::vector<WeightedGraph> negatives;
  std::vector<WeightedGraph> positives;

  std::size_t multiplicity() const { return negatives.size(); }
  std::size_t size() const {
    return negatives.empty() ? 0 : negatives.front().size();
  }
};

// Throws InputError unless there is at least one matrix per side, both sides
// have the same count, and every matrix is n x n, symmetric and in [0, 1].
void ValidateMultiGraph(const BipolarMultiGraph& multi, std::size_t n);

// The operator choices that define what a "group" is.
struct PipelineConfig {
  // Per-measure pair symmetrizers; only used on the measure path.
  std::vector<AggregatorSpec> symmetrize_negative;
  std::vector<AggregatorSpec> symmetrize_positive;
  // s-ary pointwise aggregation of each side.
  AggregatorSpec aggregate_negative = AggregatorSpec::Mean();
  AggregatorSpec aggregate_positive = AggregatorSpec::Mean();
  NegationSpec negation;
  // Bivariate merge of the negated negative side with the positive side.
  AggregatorSpec combine = AggregatorSpec::Min();
  // Weight of the graph in M = w * A + (1 - w) * F_b.
  double graph_weight = 0.0;
};

void ValidateConfig(const PipelineConfig& config);

// Associated matrices for every measure. Throws InputError if the config
// does not carry one symmetrizer pair per measure.
BipolarMultiGraph BuildMulti(const ExtendedMultipleBipolarFuzzyGraph& graph,
                             const PipelineConfig& config,
                             const ShapleyOptions& options = {});

// Pointwise s-ary aggregation of same-sized relation matrices.
WeightedGraph AggregateSide(const AggregatorSpec& aggregator,
                            std::span<const WeightedGraph> matrices);

// F_b[i][j] = combine(N(F-[i][j]), F+[i][j]) with a zero diagonal.
WeightedGraph CombineBipolar(const AggregatorSpec& combine,
                             const NegationSpec& negation,
                             const WeightedGraph& negative,
                             const WeightedGraph& positive);

// M = graph_weight * A + (1 - graph_weight) * relations, entrywise.
WeightedGraph CombineWithGraph(const WeightedGraph& graph,
                               const WeightedGraph& relations,
                               double graph_weight);

struct RelationSummary {
  WeightedGraph negative;   // aggregated F-
  WeightedGraph positive;   // aggregated F+
  WeightedGraph bipolar;    // F_b
  WeightedGraph modularity_matrix;  // M
};

// Steps 2-5 plus the graph blend, fused into one pass over the entries.
// Produces the same bits as calling AggregateSide, CombineBipolar and
// CombineWithGraph in sequence.
RelationSummary SummarizeRelations(const WeightedGraph& graph,
                                   const BipolarMultiGraph& multi,
                                   const PipelineConfig& config);

}  // namespace duolouvain

#endif  // DUOLOUVAIN_BIPOLAR_GRAPH_H_
