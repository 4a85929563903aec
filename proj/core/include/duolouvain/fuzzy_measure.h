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

#ifndef DUOLOUVAIN_FUZZY_MEASURE_H_
#define DUOLOUVAIN_FUZZY_MEASURE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace duolouvain {

// Subsets of a ground set {0, ..., n-1} are n-bit masks: bit i set <=>
// element i present.
using SubsetMask = std::uint64_t;

// Largest ground set for which exact (enumerative) Shapley values are
// computed on explicit tables.
inline constexpr std::size_t kMaxExactShapleyPlayers = 24;

// Largest ground set an explicit table may be built for.
inline constexpr std::size_t kMaxExplicitPlayers = kMaxExactShapleyPlayers;

SubsetMask MaskOf(std::span<const std::size_t> elements);
std::vector<std::size_t> ElementsOf(SubsetMask mask);

// A set function on a finite ground set, stored either as a full table over
// all 2^n subsets or as additive per-element weights.
//
// Objects of this type need not satisfy the fuzzy-measure axioms; use
// ValidateMeasure() to check them. Games produced by Restrict() are
// intentionally not normalized.
class FuzzyMeasure {
 public:
  enum class Form { kExplicit, kAdditive };

  // Full table indexed by subset mask; size must be 2^n. Entries that are
  // NaN are treated as missing and reported by ValidateMeasure().
  static FuzzyMeasure Explicit(std::size_t n, std::vector<double> table);

  // Table from (subset, value) pairs; subsets not listed are missing.
  static FuzzyMeasure FromEntries(
      std::size_t n, std::span<const std::pair<SubsetMask, double>> entries);

  static FuzzyMeasure Additive(std::vector<double> weights);

  std::size_t size() const { return n_; }
  Form form() const { return form_; }
  bool is_additive() const { return form_ == Form::kAdditive; }

  // Additive weights; empty for explicit measures.
  std::span<const double> weights() const;
  // Full table; empty for additive measures.
  std::span<const double> table() const;

  // mu(S). Throws InputError if the mask has bits outside the ground set
  // and NumericError if the table entry is missing.
  double Evaluate(SubsetMask subset) const;
  double Evaluate(std::span<const std::size_t> elements) const;

  SubsetMask full_set() const;

 private:
  FuzzyMeasure(std::size_t n, Form form, std::vector<double> values)
      : n_(n), form_(form), values_(std::move(values)) {}

  std::size_t n_;
  Form form_;
  std::vector<double> values_;
};

struct MeasureViolation {
  enum class Kind {
    kMissingEntry,
    kOutOfRange,
    kEmptySetNotZero,
    kFullSetNotOne,
    kNotMonotone,
    kNegativeWeight,
    kWeightsDoNotSumToOne,
  };
  Kind kind;
  // Offending subset pair; for monotonicity, subset is contained in superset
  // but has the larger value. Single-subset violations set both to the same
  // mask. Unused for additive-weight violations.
  SubsetMask subset = 0;
  SubsetMask superset = 0;
  std::string message;
};

// Checks the fuzzy-measure axioms: totality, range [0, 1], mu(empty) = 0,
// mu(V) = 1 and monotonicity. Monotonicity is checked on covering pairs
// (S, S + {i}), which is sufficient by transitivity. Tolerance 1e-10.
std::vector<MeasureViolation> ValidateMeasure(const FuzzyMeasure& measure);

// The game S -> mu(S) on V \ {excluded}, with the remaining elements
// renumbered 0..n-2 in their original order. Not renormalized.
FuzzyMeasure Restrict(const FuzzyMeasure& measure, std::size_t excluded);

// Exact Shapley values by subset enumeration. Additive games return their
// weights directly. Throws NumericError for explicit games above
// kMaxExactShapleyPlayers or with missing entries.
std::vector<double> ShapleyValues(const FuzzyMeasure& measure);

// Shapley values of Restrict(measure, excluded): n-1 values in the
// renumbered order.
std::vector<double> RestrictedShapleyValues(const FuzzyMeasure& measure,
                                            std::size_t excluded);

struct SampledShapley {
  std::vector<double> values;
  // Standard error of each estimate (sample sd / sqrt(samples)); zero when
  // samples == 1 or the game is additive.
  std::vector<double> standard_errors;
};

// Permutation-sampling estimate: the average marginal contribution of each
// element over `samples` uniformly random orderings. Deterministic in seed.
SampledShapley SampledShapleyValues(const FuzzyMeasure& measure,
                                    std::size_t samples, std::uint64_t seed);

// A pair of fuzzy measures over the same ground set: negative (discrepancy)
// and positive (affinity) evidence.
struct BipolarFuzzyMeasure {
  FuzzyMeasure negative;
  FuzzyMeasure positive;
};

}  // namespace duolouvain

#endif  // DUOLOUVAIN_FUZZY_MEASURE_H_
