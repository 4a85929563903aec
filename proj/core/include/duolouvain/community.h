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

#ifndef DUOLOUVAIN_COMMUNITY_H_
#define DUOLOUVAIN_COMMUNITY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "duolouvain/bipolar_graph.h"
#include "duolouvain/partition.h"
#include "duolouvain/weighted_graph.h"

namespace duolouvain {

// Newman-Girvan modularity of `partition` on the weighted graph `m`, with
// degrees taken as row sums. Throws NumericError if the total weight is 0.
double Modularity(const WeightedGraph& m, const Partition& partition);

// Supervertex graph: W*[c][d] = sum of W[i][j] over i in c, j in d. The
// diagonal holds the full (double-counted) internal weight, so row sums,
// total weight and modularity are preserved.
WeightedGraph Coarsen(const WeightedGraph& m, const Partition& partition);

// Community bookkeeping for local moving on a modularity matrix M:
// Sigma_in (weight inside each community, both orientations plus self
// loops), Sigma_tot (total degree of each community), node degrees and 2m.
//
// Community ids are node ids of the initial partition's representatives;
// some ids may refer to empty communities.
class LouvainState {
 public:
  static constexpr std::size_t kIsolated =
      std::numeric_limits<std::size_t>::max();

  // Every node in its own community. `m` must outlive the state.
  explicit LouvainState(const WeightedGraph& m);
  LouvainState(const WeightedGraph& m, const Partition& partition);

  std::size_t size() const { return community_.size(); }
  // kIsolated while a node is detached by Remove().
  std::size_t community_of(std::size_t node) const { return community_[node]; }
  double total_weight() const { return total_weight_; }
  double degree(std::size_t node) const { return degree_[node]; }
  double internal_weight(std::size_t c) const { return internal_[c]; }
  double total_incident(std::size_t c) const { return incident_[c]; }

  // k_{i,in}: weight between `node` and the other members of `c`.
  double LinkWeight(std::size_t node, std::size_t c) const;

  // Modularity change for inserting a detached node into `c`. Throws
  // InputError for an unknown community or a node that is not detached.
  double DeltaQ(std::size_t node, std::size_t c) const;
  // Same, with k_{i,in} supplied by the caller.
  double DeltaQ(std::size_t node, std::size_t c, double link_weight) const;

  void Remove(std::size_t node);
  void Remove(std::size_t node, double link_weight);
  void Insert(std::size_t node, std::size_t c);
  void Insert(std::size_t node, std::size_t c, double link_weight);

  // Throws if any node is detached.
  Partition ToPartition() const;

  // True if the cached Sigma_in / Sigma_tot match a recomputation within
  // `tolerance` and Sigma_tot sums to 2m.
  bool CachesConsistent(double tolerance = 1e-9) const;

 private:
  const WeightedGraph* m_;
  std::vector<std::size_t> community_;
  std::vector<double> degree_;
  std::vector<double> internal_;
  std::vector<double> incident_;
  double total_weight_;
};

// Reported after every accepted move.
struct MoveEvent {
  std::size_t level;
  std::size_t node;          // level-local node index
  std::size_t from;          // community ids at that level
  std::size_t to;
  double improvement;        // modularity increase of the move
};

struct LouvainOptions {
  std::uint64_t seed = 0;
  // Moves must improve modularity by more than this.
  double min_improvement = 1e-12;
  std::function<void(const MoveEvent&)> on_move;
};

struct DetectionResult {
  Partition partition;     // over the original nodes, canonical
  double modularity = 0.0; // on the modularity matrix
  std::size_t levels = 0;  // local-moving phases that changed something
  std::size_t moves = 0;
};

// Classic Louvain: neighbours and modularity both from `graph`.
DetectionResult Louvain(const WeightedGraph& graph,
                        const LouvainOptions& options = {});

// Louvain with candidate communities drawn from neighbours in `neighbors`
// (entries > 0) while gains are evaluated on `modularity_matrix`. Both
// matrices are coarsened between levels. DuoLouvain(A, A) is Louvain(A).
DetectionResult DuoLouvain(const WeightedGraph& neighbors,
                           const WeightedGraph& modularity_matrix,
                           const LouvainOptions& options = {});

struct BipolarDetection {
  DetectionResult detection;
  RelationSummary relations;
};

// Full pipeline from relation matrices: aggregate each side, negate,
// combine, blend with the graph, then DuoLouvain(graph, M).
BipolarDetection MultipleBipolarDuoLouvain(const WeightedGraph& graph,
                                           const BipolarMultiGraph& relations,
                                           const PipelineConfig& config,
                                           const LouvainOptions& options = {});

// Same, starting from bipolar fuzzy measures (Shapley path).
BipolarDetection MultipleBipolarDuoLouvain(
    const ExtendedMultipleBipolarFuzzyGraph& graph,
    const PipelineConfig& config, const LouvainOptions& options = {},
    const ShapleyOptions& shapley = {});

}  // namespace duolouvain

#endif  // DUOLOUVAIN_COMMUNITY_H_
