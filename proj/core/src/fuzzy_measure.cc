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

#include "duolouvain/fuzzy_measure.h"

#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "duolouvain/errors.h"
#include "duolouvain/random.h"

namespace duolouvain {
namespace {

constexpr double kTolerance = 1e-10;
constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

std::string FormatSubset(SubsetMask mask) {
  // 1-based, to match how measures are written in files.
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t e : ElementsOf(mask)) {
    if (!first) out << ',';
    out << e + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

void CheckGroundSize(std::size_t n) {
  if (n == 0) throw InputError("ground set must have at least one element");
}

std::vector<double> ExplicitShapley(std::size_t n,
                                    std::span<const double> table) {
  if (n > kMaxExactShapleyPlayers) {
    throw NumericError("exact Shapley values are limited to " +
                       std::to_string(kMaxExactShapleyPlayers) +
                       " players; use sampled Shapley values instead");
  }
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (std::isnan(table[s])) {
      throw NumericError("missing table entry for subset " + FormatSubset(s));
    }
  }
  // Sh_i = (1/n) sum_k mean over |S| = k, i not in S, of v(S+i) - v(S).
  // Averaging within each size first keeps additive games exact whenever
  // their weights are exactly representable.
  std::vector<double> sums(n * n, 0.0);  // [i][k]
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  for (SubsetMask s = 0; s <= full; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size == n) continue;
    const double base = table[s];
    for (std::size_t i = 0; i < n; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (s & bit) continue;
      sums[i * n + size] += table[s | bit] - base;
    }
  }
  std::vector<double> subsets(n, 1.0);  // C(n-1, k), exact for n <= 24
  for (std::size_t k = 1; k < n; ++k) {
    subsets[k] = subsets[k - 1] * static_cast<double>(n - k) /
                 static_cast<double>(k);
  }
  std::vector<double> sh(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) total += sums[i * n + k] / subsets[k];
    sh[i] = total / static_cast<double>(n);
  }
  return sh;
}

}  // namespace

SubsetMask MaskOf(std::span<const std::size_t> elements) {
  SubsetMask mask = 0;
  for (std::size_t e : elements) {
    if (e >= 64) throw InputError("element index out of range");
    mask |= SubsetMask{1} << e;
  }
  return mask;
}

std::vector<std::size_t> ElementsOf(SubsetMask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

FuzzyMeasure FuzzyMeasure::Explicit(std::size_t n, std::vector<double> table) {
  CheckGroundSize(n);
  if (n > kMaxExplicitPlayers) {
    throw InputError("explicit tables are limited to " +
                     std::to_string(kMaxExplicitPlayers) + " elements");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw InputError("explicit table must have 2^n entries");
  }
  return FuzzyMeasure(n, Form::kExplicit, std::move(table));
}

FuzzyMeasure FuzzyMeasure::FromEntries(
    std::size_t n, std::span<const std::pair<SubsetMask, double>> entries) {
  CheckGroundSize(n);
  if (n > kMaxExplicitPlayers) {
    throw InputError("explicit tables are limited to " +
                     std::to_string(kMaxExplicitPlayers) + " elements");
  }
  std::vector<double> table(std::size_t{1} << n, kMissing);
  for (const auto& [mask, value] : entries) {
    if (mask >= table.size()) {
      throw InputError("subset " + FormatSubset(mask) +
                       " is outside the ground set");
    }
    if (!std::isnan(table[mask])) {
      throw InputError("subset " + FormatSubset(mask) + " listed twice");
    }
    table[mask] = value;
  }
  return FuzzyMeasure(n, Form::kExplicit, std::move(table));
}

FuzzyMeasure FuzzyMeasure::Additive(std::vector<double> weights) {
  CheckGroundSize(weights.size());
  if (weights.size() > 64) {
    throw InputError("additive measures are limited to 64 elements");
  }
  const std::size_t n = weights.size();
  return FuzzyMeasure(n, Form::kAdditive, std::move(weights));
}

std::span<const double> FuzzyMeasure::weights() const {
  if (form_ == Form::kAdditive) return values_;
  return {};
}

std::span<const double> FuzzyMeasure::table() const {
  if (form_ == Form::kExplicit) return values_;
  return {};
}

SubsetMask FuzzyMeasure::full_set() const {
  return n_ == 64 ? ~SubsetMask{0} : (SubsetMask{1} << n_) - 1;
}

double FuzzyMeasure::Evaluate(SubsetMask subset) const {
  if ((subset & ~full_set()) != 0) {
    throw InputError("subset " + FormatSubset(subset) +
                     " is outside the ground set of size " +
                     std::to_string(n_));
  }
  if (form_ == Form::kAdditive) {
    double total = 0.0;
    for (std::size_t e : ElementsOf(subset)) total += values_[e];
    return total;
  }
  const double value = values_[subset];
  if (std::isnan(value)) {
    throw NumericError("missing table entry for subset " +
                       FormatSubset(subset));
  }
  return value;
}

double FuzzyMeasure::Evaluate(std::span<const std::size_t> elements) const {
  for (std::size_t e : elements) {
    if (e >= n_) {
      throw InputError("element " + std::to_string(e) +
                       " is outside the ground set of size " +
                       std::to_string(n_));
    }
  }
  return Evaluate(MaskOf(elements));
}

std::vector<MeasureViolation> ValidateMeasure(const FuzzyMeasure& measure) {
  using Kind = MeasureViolation::Kind;
  std::vector<MeasureViolation> report;
  const std::size_t n = measure.size();

  if (measure.is_additive()) {
    const auto w = measure.weights();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(w[i] >= 0.0)) {
        report.push_back({Kind::kNegativeWeight, SubsetMask{1} << i,
                          SubsetMask{1} << i,
                          "weight of element " + std::to_string(i + 1) +
                              " is negative"});
      }
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(std::abs(total - 1.0) <= kTolerance)) {
      report.push_back({Kind::kWeightsDoNotSumToOne, 0, measure.full_set(),
                        "weights sum to " + std::to_string(total)});
    }
    return report;
  }

  const auto t = measure.table();
  const SubsetMask full = measure.full_set();
  bool complete = true;
  for (SubsetMask s = 0; s <= full; ++s) {
    if (std::isnan(t[s])) {
      complete = false;
      report.push_back({Kind::kMissingEntry, s, s,
                        "no value for subset " + FormatSubset(s)});
    } else if (t[s] < -kTolerance || t[s] > 1.0 + kTolerance) {
      report.push_back({Kind::kOutOfRange, s, s,
                        "value of " + FormatSubset(s) + " is outside [0, 1]"});
    }
  }
  if (!std::isnan(t[0]) && std::abs(t[0]) > kTolerance) {
    report.push_back({Kind::kEmptySetNotZero, 0, 0,
                      "value of the empty set is not 0"});
  }
  if (!std::isnan(t[full]) && std::abs(t[full] - 1.0) > kTolerance) {
    report.push_back({Kind::kFullSetNotOne, full, full,
                      "value of the full set is not 1"});
  }
  if (!complete) return report;

  for (SubsetMask s = 0; s <= full; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (s & bit) continue;
      if (t[s] > t[s | bit] + kTolerance) {
        report.push_back({Kind::kNotMonotone, s, s | bit,
                          FormatSubset(s) + " is contained in " +
                              FormatSubset(s | bit) +
                              " but has a larger value"});
      }
    }
  }
  return report;
}

FuzzyMeasure Restrict(const FuzzyMeasure& measure, std::size_t excluded) {
  const std::size_t n = measure.size();
  if (excluded >= n) {
    throw InputError("excluded element " + std::to_string(excluded) +
                     " is outside the ground set of size " +
                     std::to_string(n));
  }
  if (n == 1) {
    throw InputError("cannot remove the only element of a ground set");
  }
  if (measure.is_additive()) {
    std::vector<double> w(measure.weights().begin(), measure.weights().end());
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(excluded));
    return FuzzyMeasure::Additive(std::move(w));
  }
  const auto t = measure.table();
  const SubsetMask low = (SubsetMask{1} << excluded) - 1;
  std::vector<double> table(std::size_t{1} << (n - 1));
  for (SubsetMask s = 0; s < table.size(); ++s) {
    table[s] = t[(s & low) | ((s & ~low) << 1)];
  }
  return FuzzyMeasure::Explicit(n - 1, std::move(table));
}

std::vector<double> ShapleyValues(const FuzzyMeasure& measure) {
  if (measure.is_additive()) {
    return {measure.weights().begin(), measure.weights().end()};
  }
  return ExplicitShapley(measure.size(), measure.table());
}

std::vector<double> RestrictedShapleyValues(const FuzzyMeasure& measure,
                                            std::size_t excluded) {
  return ShapleyValues(Restrict(measure, excluded));
}

SampledShapley SampledShapleyValues(const FuzzyMeasure& measure,
                                    std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InputError("samples must be at least 1");
  const std::size_t n = measure.size();
  if (measure.is_additive()) {
    return {ShapleyValues(measure), std::vector<double>(n, 0.0)};
  }
  const auto t = measure.table();
  for (SubsetMask s = 0; s < t.size(); ++s) {
    if (std::isnan(t[s])) {
      throw NumericError("missing table entry for subset " + FormatSubset(s));
    }
  }

  Rng rng = MakeRng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Welford running mean and squared deviations per element.
  std::vector<double> mean(n, 0.0), m2(n, 0.0);
  for (std::size_t k = 1; k <= samples; ++k) {
    Shuffle(std::span(order), rng);
    SubsetMask coalition = 0;
    double previous = t[0];
    for (std::size_t e : order) {
      coalition |= SubsetMask{1} << e;
      const double current = t[coalition];
      const double contribution = current - previous;
      previous = current;
      const double delta = contribution - mean[e];
      mean[e] += delta / static_cast<double>(k);
      m2[e] += delta * (contribution - mean[e]);
    }
  }
  SampledShapley result{std::move(mean), std::vector<double>(n, 0.0)};
  if (samples > 1) {
    const double s = static_cast<double>(samples);
    for (std::size_t i = 0; i < n; ++i) {
      result.standard_errors[i] = std::sqrt(m2[i] / (s - 1.0) / s);
    }
  }
  return result;
}

}  // namespace duolouvain
