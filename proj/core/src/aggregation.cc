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

#include "duolouvain/aggregation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>

#include "duolouvain/errors.h"

namespace duolouvain {
namespace {

constexpr double kWeightTolerance = 1e-10;

std::string FormatWeight(double w) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, end);
}

}  // namespace

AggregatorSpec AggregatorSpec::Owa(std::vector<double> weights) {
  if (weights.empty()) throw InputError("OWA operator needs weights");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw InputError("OWA weight " + FormatWeight(w) + " is outside [0, 1]");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw InputError("OWA weights sum to " + FormatWeight(total) +
                     ", expected 1");
  }
  return AggregatorSpec(Kind::kOwa, std::move(weights));
}

AggregatorSpec AggregatorSpec::Parse(std::string_view text) {
  if (text == "min") return Min();
  if (text == "max") return Max();
  if (text == "mean" || text == "average") return Mean();
  if (text.starts_with("owa:")) {
    std::vector<double> weights;
    std::string_view rest = text.substr(4);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      double w = 0.0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), w);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
        throw InputError("bad OWA weight '" + std::string(item) + "'");
      }
      weights.push_back(w);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return Owa(std::move(weights));
  }
  throw InputError("unknown aggregation operator '" + std::string(text) +
                   "' (expected min, max, mean or owa:w1,w2,...)");
}

std::string AggregatorSpec::ToString() const {
  switch (kind_) {
    case Kind::kMin:
      return "min";
    case Kind::kMax:
      return "max";
    case Kind::kMean:
      return "mean";
    case Kind::kOwa: {
      std::string out = "owa:";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i > 0) out += ',';
        out += FormatWeight(weights_[i]);
      }
      return out;
    }
  }
  return {};
}

double Aggregate(const AggregatorSpec& spec, std::span<const double> values) {
  if (values.empty()) throw InputError("cannot aggregate an empty vector");
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InputError("aggregation input " + FormatWeight(v) +
                       " is outside [0, 1]");
    }
  }
  if (spec.kind() == AggregatorSpec::Kind::kOwa &&
      spec.weights().size() != values.size()) {
    throw InputError("OWA operator has " +
                     std::to_string(spec.weights().size()) +
                     " weights but received " + std::to_string(values.size()) +
                     " values");
  }
  std::vector<double> scratch(values.begin(), values.end());
  return AggregateUnchecked(spec, scratch);
}

double AggregateUnchecked(const AggregatorSpec& spec,
                          std::span<double> values) {
  switch (spec.kind()) {
    case AggregatorSpec::Kind::kMin:
      return *std::min_element(values.begin(), values.end());
    case AggregatorSpec::Kind::kMax:
      return *std::max_element(values.begin(), values.end());
    case AggregatorSpec::Kind::kMean: {
      const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
      const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                          static_cast<double>(values.size());
      // Rounding must not push the mean outside [min, max].
      return std::clamp(mean, *lo, *hi);
    }
    case AggregatorSpec::Kind::kOwa: {
      std::stable_sort(values.begin(), values.end(), std::greater<>());
      const auto& w = spec.weights();
      double result = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) result += w[i] * values[i];
      return std::clamp(result, values.back(), values.front());
    }
  }
  return 0.0;
}

AggregationClass Classify(const AggregatorSpec& spec) {
  switch (spec.kind()) {
    case AggregatorSpec::Kind::kMin:
      return AggregationClass::kConjunctive;
    case AggregatorSpec::Kind::kMax:
      return AggregationClass::kDisjunctive;
    case AggregatorSpec::Kind::kMean:
    case AggregatorSpec::Kind::kOwa:
      return AggregationClass::kAveraging;
  }
  return AggregationClass::kAveraging;
}

std::string_view ToString(AggregationClass c) {
  switch (c) {
    case AggregationClass::kConjunctive:
      return "conjunctive";
    case AggregationClass::kDisjunctive:
      return "disjunctive";
    case AggregationClass::kAveraging:
      return "averaging";
  }
  return "";
}

NegationSpec NegationSpec::Parse(std::string_view text) {
  if (text == "standard") return {};
  throw InputError("unknown negation '" + std::string(text) +
                   "' (only 'standard' is supported)");
}

WeightedGraph NegateMatrix(const NegationSpec& negation,
                           const WeightedGraph& matrix) {
  CheckRelationMatrix(matrix, "negated matrix");
  const std::size_t n = matrix.size();
  WeightedGraph out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.Set(i, j, Negate(negation, matrix(i, j)));
    }
  }
  return out;
}

}  // namespace duolouvain
