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

#include "duolouvain/weighted_graph.h"

#include <limits>
#include <numeric>
#include <string>

#include "duolouvain/errors.h"

namespace duolouvain {

WeightedGraph WeightedGraph::FromDense(std::size_t n,
                                       std::vector<double> values) {
  if (values.size() != n * n) {
    throw InputError("dense matrix needs " + std::to_string(n * n) +
                     " values, got " + std::to_string(values.size()));
  }
  WeightedGraph g;
  g.n_ = n;
  g.w_ = std::move(values);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = g(i, j);
      if (!(v >= 0.0) || v == std::numeric_limits<double>::infinity()) {
        throw InputError("matrix entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) +
                         ") must be finite and nonnegative");
      }
      if (j > i && v != g(j, i)) {
        throw InputError("matrix is not symmetric at (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ")");
      }
    }
  }
  return g;
}

double WeightedGraph::TotalWeight() const {
  return std::accumulate(w_.begin(), w_.end(), 0.0);
}

std::vector<double> WeightedGraph::RowSums() const {
  std::vector<double> k(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = row(i);
    k[i] = std::accumulate(r.begin(), r.end(), 0.0);
  }
  return k;
}

bool WeightedGraph::IsSymmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

void CheckRelationMatrix(const WeightedGraph& matrix, std::string_view what) {
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = matrix(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw InputError(std::string(what) + " entry (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is outside [0, 1]");
      }
    }
  }
}

void CheckSameSize(const WeightedGraph& a, const WeightedGraph& b,
                   std::string_view what) {
  if (a.size() != b.size()) {
    throw InputError(std::string(what) + ": dimension mismatch (" +
                     std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
}

}  // namespace duolouvain
