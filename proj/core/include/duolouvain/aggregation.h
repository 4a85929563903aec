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

#ifndef DUOLOUVAIN_AGGREGATION_H_
#define DUOLOUVAIN_AGGREGATION_H_

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duolouvain/weighted_graph.h"

namespace duolouvain {

// An aggregation operator [0,1]^k -> [0,1]. Min, max and the arithmetic mean
// work for any arity; OWA operators fix the arity to the number of weights.
class AggregatorSpec {
 public:
  enum class Kind { kMin, kMax, kMean, kOwa };

  static AggregatorSpec Min() { return AggregatorSpec(Kind::kMin, {}); }
  static AggregatorSpec Max() { return AggregatorSpec(Kind::kMax, {}); }
  static AggregatorSpec Mean() { return AggregatorSpec(Kind::kMean, {}); }
  // Weights must lie in [0, 1] and sum to 1 within 1e-10.
  static AggregatorSpec Owa(std::vector<double> weights);

  // Parses "min", "max", "mean" or "owa:w1,w2,...".
  static AggregatorSpec Parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<double>& weights() const { return weights_; }

  // Inverse of Parse().
  std::string ToString() const;

  friend bool operator==(const AggregatorSpec&, const AggregatorSpec&) = default;

 private:
  AggregatorSpec(Kind kind, std::vector<double> weights)
      : kind_(kind), weights_(std::move(weights)) {}

  Kind kind_;
  std::vector<double> weights_;
};

// Throws InputError on empty input, values outside [0, 1], or an OWA arity
// mismatch.
double Aggregate(const AggregatorSpec& spec, std::span<const double> values);
inline double Aggregate(const AggregatorSpec& spec,
                        std::initializer_list<double> values) {
  return Aggregate(spec, std::span<const double>(values.begin(), values.size()));
}

// Aggregate() without input validation, for inner loops whose inputs are
// already known to be in range. OWA sorts `values` in place.
double AggregateUnchecked(const AggregatorSpec& spec, std::span<double> values);

enum class AggregationClass { kConjunctive, kDisjunctive, kAveraging };

// Min is conjunctive, max disjunctive; the mean and every OWA operator are
// averaging (bounded by min and max).
AggregationClass Classify(const AggregatorSpec& spec);
std::string_view ToString(AggregationClass c);

// Only the standard negation x -> 1 - x is provided.
struct NegationSpec {
  enum class Kind { kStandard };
  Kind kind = Kind::kStandard;

  static NegationSpec Parse(std::string_view text);
  std::string ToString() const { return "standard"; }

  friend bool operator==(const NegationSpec&, const NegationSpec&) = default;
};

inline double Negate(const NegationSpec&, double x) { return 1.0 - x; }

// Entrywise negation. Throws InputError if an entry is outside [0, 1].
WeightedGraph NegateMatrix(const NegationSpec& negation,
                           const WeightedGraph& matrix);

}  // namespace duolouvain

#endif  // DUOLOUVAIN_AGGREGATION_H_
