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

#include "duolouvain/bipolar_graph.h"

#include <algorithm>
#include <string>

#include "duolouvain/errors.h"
#include "duolouvain/random.h"

namespace duolouvain {
namespace {

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void CheckArity(const AggregatorSpec& spec, std::size_t arity,
                std::string_view what) {
  if (spec.kind() == AggregatorSpec::Kind::kOwa &&
      spec.weights().size() != arity) {
    throw InputError(std::string(what) + " is an OWA operator with " +
                     std::to_string(spec.weights().size()) +
                     " weights but must aggregate " + std::to_string(arity) +
                     " values");
  }
}

std::vector<double> ShapleyFor(const FuzzyMeasure& game,
                               const ShapleyOptions& options,
                               std::uint64_t stream) {
  if (options.method == ShapleyOptions::Method::kExact) {
    return ShapleyValues(game);
  }
  return SampledShapleyValues(game, options.samples,
                              options.seed + 0x9e3779b97f4a7c15ULL * stream)
      .values;
}

}  // namespace

WeightedGraph AssociatedMatrix(const FuzzyMeasure& measure,
                               const AggregatorSpec& symmetrize,
                               const ShapleyOptions& options) {
  CheckArity(symmetrize, 2, "pair symmetrizer");
  const std::size_t n = measure.size();
  WeightedGraph f(n);
  if (n < 2) return f;

  const std::vector<double> sh = ShapleyFor(measure, options, 0);
  // without[j][r]: Shapley value of the r-th survivor once j is removed.
  std::vector<std::vector<double>> without(n);
  for (std::size_t j = 0; j < n; ++j) {
    without[j] = ShapleyFor(Restrict(measure, j), options, j + 1);
  }
  // Survivor index of i in the game without j.
  auto rank = [](std::size_t i, std::size_t j) { return i < j ? i : i - 1; };

  double pair[2];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pair[0] = Clamp01(sh[i] - without[j][rank(i, j)]);
      pair[1] = Clamp01(sh[j] - without[i][rank(j, i)]);
      f.Set(i, j, AggregateUnchecked(symmetrize, pair));
    }
  }
  return f;
}

BipolarMatrices BipolarAssociated(const BipolarFuzzyMeasure& measure,
                                  const AggregatorSpec& symmetrize_negative,
                                  const AggregatorSpec& symmetrize_positive,
                                  const ShapleyOptions& options) {
  if (measure.negative.size() != measure.positive.size()) {
    throw InputError("bipolar measure components have different ground sets");
  }
  ShapleyOptions positive_options = options;
  positive_options.seed = MixSeed(options.seed);
  return {AssociatedMatrix(measure.negative, symmetrize_negative, options),
          AssociatedMatrix(measure.positive, symmetrize_positive,
                           positive_options)};
}

void ValidateMultiGraph(const BipolarMultiGraph& multi, std::size_t n) {
  if (multi.negatives.empty() || multi.positives.empty()) {
    throw InputError("at least one negative and one positive relation matrix "
                     "is required");
  }
  if (multi.negatives.size() != multi.positives.size()) {
    throw InputError("got " + std::to_string(multi.negatives.size()) +
                     " negative but " + std::to_string(multi.positives.size()) +
                     " positive relation matrices");
  }
  auto check = [n](const WeightedGraph& f, const std::string& name) {
    if (f.size() != n) {
      throw InputError(name + " has dimension " + std::to_string(f.size()) +
                       ", expected " + std::to_string(n));
    }
    if (!f.IsSymmetric()) throw InputError(name + " is not symmetric");
    CheckRelationMatrix(f, name);
  };
  for (std::size_t l = 0; l < multi.negatives.size(); ++l) {
    check(multi.negatives[l], "F- #" + std::to_string(l + 1));
    check(multi.positives[l], "F+ #" + std::to_string(l + 1));
  }
}

void ValidateConfig(const PipelineConfig& config) {
  if (!(config.graph_weight >= 0.0 && config.graph_weight <= 1.0)) {
    throw InputError("gamma must lie in [0, 1]");
  }
  if (config.symmetrize_negative.size() != config.symmetrize_positive.size()) {
    throw InputError("phi_neg and phi_pos must have the same length");
  }
  CheckArity(config.combine, 2, "psi");
}

BipolarMultiGraph BuildMulti(const ExtendedMultipleBipolarFuzzyGraph& graph,
                             const PipelineConfig& config,
                             const ShapleyOptions& options) {
  const std::size_t s = graph.measures.size();
  if (s == 0) throw InputError("at least one bipolar measure is required");
  if (config.symmetrize_negative.size() != s ||
      config.symmetrize_positive.size() != s) {
    throw InputError("got " + std::to_string(s) + " bipolar measures but " +
                     std::to_string(config.symmetrize_negative.size()) + "/" +
                     std::to_string(config.symmetrize_positive.size()) +
                     " phi_neg/phi_pos operators");
  }
  BipolarMultiGraph multi;
  for (std::size_t l = 0; l < s; ++l) {
    const auto& m = graph.measures[l];
    if (m.negative.size() != graph.graph.size() ||
        m.positive.size() != graph.graph.size()) {
      throw InputError("measure #" + std::to_string(l + 1) +
                       " is not defined over the graph's " +
                       std::to_string(graph.graph.size()) + " nodes");
    }
    ShapleyOptions measure_options = options;
    measure_options.seed = options.seed + l;
    auto [neg, pos] =
        BipolarAssociated(m, config.symmetrize_negative[l],
                          config.symmetrize_positive[l], measure_options);
    multi.negatives.push_back(std::move(neg));
    multi.positives.push_back(std::move(pos));
  }
  return multi;
}

WeightedGraph AggregateSide(const AggregatorSpec& aggregator,
                            std::span<const WeightedGraph> matrices) {
  if (matrices.empty()) throw InputError("no matrices to aggregate");
  const std::size_t n = matrices.front().size();
  for (const auto& f : matrices) {
    CheckSameSize(matrices.front(), f, "side aggregation");
    CheckRelationMatrix(f, "relation matrix");
  }
  CheckArity(aggregator, matrices.size(), "side aggregator");
  WeightedGraph out(n);
  std::vector<double> column(matrices.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t l = 0; l < matrices.size(); ++l) {
        column[l] = matrices[l](i, j);
      }
      out.Set(i, j, AggregateUnchecked(aggregator, column));
    }
  }
  return out;
}

WeightedGraph CombineBipolar(const AggregatorSpec& combine,
                             const NegationSpec& negation,
                             const WeightedGraph& negative,
                             const WeightedGraph& positive) {
  CheckSameSize(negative, positive, "bipolar combination");
  CheckRelationMatrix(positive, "F+");
  CheckArity(combine, 2, "psi");
  const WeightedGraph opposite = NegateMatrix(negation, negative);
  const std::size_t n = negative.size();
  WeightedGraph out(n);
  double pair[2];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pair[0] = opposite(i, j);
      pair[1] = positive(i, j);
      out.Set(i, j, AggregateUnchecked(combine, pair));
    }
  }
  return out;
}

WeightedGraph CombineWithGraph(const WeightedGraph& graph,
                               const WeightedGraph& relations,
                               double graph_weight) {
  CheckSameSize(graph, relations, "graph blend");
  if (!(graph_weight >= 0.0 && graph_weight <= 1.0)) {
    throw InputError("gamma must lie in [0, 1]");
  }
  const std::size_t n = graph.size();
  const double relation_weight = 1.0 - graph_weight;
  WeightedGraph out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.Set(i, j,
              graph_weight * graph(i, j) + relation_weight * relations(i, j));
    }
  }
  return out;
}

RelationSummary SummarizeRelations(const WeightedGraph& graph,
                                   const BipolarMultiGraph& multi,
                                   const PipelineConfig& config) {
  ValidateConfig(config);
  const std::size_t n = graph.size();
  ValidateMultiGraph(multi, n);
  const std::size_t s = multi.multiplicity();
  CheckArity(config.aggregate_negative, s, "Phi_neg");
  CheckArity(config.aggregate_positive, s, "Phi_pos");

  RelationSummary out{WeightedGraph(n), WeightedGraph(n), WeightedGraph(n),
                      WeightedGraph(n)};
  const double graph_weight = config.graph_weight;
  const double relation_weight = 1.0 - graph_weight;
  std::vector<double> column(s);
  double pair[2];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t l = 0; l < s; ++l) column[l] = multi.negatives[l](i, j);
      const double negative = AggregateUnchecked(config.aggregate_negative, column);
      for (std::size_t l = 0; l < s; ++l) column[l] = multi.positives[l](i, j);
      const double positive = AggregateUnchecked(config.aggregate_positive, column);
      double bipolar = 0.0;
      if (i != j) {
        pair[0] = Negate(config.negation, negative);
        pair[1] = positive;
        bipolar = AggregateUnchecked(config.combine, pair);
      }
      out.negative.Set(i, j, negative);
      out.positive.Set(i, j, positive);
      out.bipolar.Set(i, j, bipolar);
      out.modularity_matrix.Set(
          i, j, graph_weight * graph(i, j) + relation_weight * bipolar);
    }
  }
  return out;
}

}  // namespace duolouvain
