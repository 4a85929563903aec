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

#ifndef DUOLOUVAIN_WEIGHTED_GRAPH_H_
#define DUOLOUVAIN_WEIGHTED_GRAPH_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace duolouvain {

// Dense symmetric matrix of nonnegative weights over nodes 0..n-1. Used both
// for graph topology (adjacency matrix A) and for relation matrices (the F
// family), which additionally stay inside [0, 1]. Diagonal entries are
// allowed; coarsening stores internal community weight there.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n) : n_(n), w_(n * n, 0.0) {}

  // Row-major n*n values. Throws InputError unless the matrix is symmetric
  // and nonnegative.
  static WeightedGraph FromDense(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return w_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {w_.data() + i * n_, n_};
  }
  std::span<const double> values() const { return w_; }

  // Sets W[i][j] and W[j][i].
  void Set(std::size_t i, std::size_t j, double weight) {
    w_[i * n_ + j] = weight;
    w_[j * n_ + i] = weight;
  }

  // Sum over all ordered pairs, i.e. 2m for an undirected graph.
  double TotalWeight() const;
  // Weighted degrees k_i (row sums, diagonal counted once).
  std::vector<double> RowSums() const;

  bool IsSymmetric() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

// Throws InputError naming `what` unless every entry is inside [0, 1].
void CheckRelationMatrix(const WeightedGraph& matrix, std::string_view what);

// Throws InputError unless both matrices have the same dimension.
void CheckSameSize(const WeightedGraph& a, const WeightedGraph& b,
                   std::string_view what);

}  // namespace duolouvain

#endif  // DUOLOUVAIN_WEIGHTED_GRAPH_H_
