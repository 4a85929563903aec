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

#include "duolouvain/community.h"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "duolouvain/errors.h"
#include "duolouvain/random.h"

namespace duolouvain {
namespace {

void CheckPositiveWeight(double total) {
  if (!(total > 0.0)) {
    throw NumericError("modularity is undefined: total edge weight is zero");
  }
}

struct SparseRow {
  std::vector<std::size_t> nodes;
  std::vector<double> weights;
};

// Off-diagonal nonzeros of every row.
std::vector<SparseRow> SparseRows(const WeightedGraph& g) {
  const std::size_t n = g.size();
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = g.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && r[j] > 0.0) {
        rows[i].nodes.push_back(j);
        rows[i].weights.push_back(r[j]);
      }
    }
  }
  return rows;
}

// One local-moving phase on a single level. Returns the number of accepted
// moves; `state` holds the resulting communities.
std::size_t MoveNodes(const WeightedGraph& neighbors,
                      const WeightedGraph& modularity_matrix,
                      LouvainState& state, Rng& rng, std::size_t level,
                      const LouvainOptions& options) {
  const std::size_t n = modularity_matrix.size();
  const std::vector<SparseRow> candidates = SparseRows(neighbors);
  const std::vector<SparseRow> links = SparseRows(modularity_matrix);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> link_to(n, 0.0);
  std::vector<std::size_t> touched;
  // seen[c] == visit marks c as already evaluated during this visit.
  std::vector<std::size_t> seen(n, 0);
  std::size_t visit = 0;

  // Smallest node currently in community c (only needed to break ties).
  auto min_member = [&](std::size_t c) {
    for (std::size_t v = 0; v < n; ++v) {
      if (state.community_of(v) == c) return v;
    }
    return n;
  };

  std::size_t moves = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    Shuffle(std::span(order), rng);
    for (std::size_t node : order) {
      ++visit;
      const std::size_t home = state.community_of(node);
      const SparseRow& row = links[node];
      for (std::size_t k = 0; k < row.nodes.size(); ++k) {
        const std::size_t c = state.community_of(row.nodes[k]);
        if (link_to[c] == 0.0) touched.push_back(c);
        link_to[c] += row.weights[k];
      }

      state.Remove(node, link_to[home]);
      const double home_gain = state.DeltaQ(node, home, link_to[home]);
      std::size_t best = home;
      double best_gain = home_gain;
      seen[home] = visit;
      for (std::size_t j : candidates[node].nodes) {
        const std::size_t c = state.community_of(j);
        if (seen[c] == visit) continue;
        seen[c] = visit;
        const double gain = state.DeltaQ(node, c, link_to[c]);
        if (gain > best_gain + options.min_improvement) {
          best = c;
          best_gain = gain;
        } else if (gain >= best_gain - options.min_improvement &&
                   min_member(c) < min_member(best)) {
          best = c;
          best_gain = gain;
        }
      }

      const double improvement = best_gain - home_gain;
      if (best != home && best_gain > options.min_improvement &&
          improvement > options.min_improvement) {
        state.Insert(node, best, link_to[best]);
        ++moves;
        moved = true;
        if (options.on_move) {
          options.on_move({level, node, home, best, improvement});
        }
      } else {
        state.Insert(node, home, link_to[home]);
      }

      for (std::size_t c : touched) link_to[c] = 0.0;
      touched.clear();
    }
  }
  return moves;
}

}  // namespace

double Modularity(const WeightedGraph& m, const Partition& partition) {
  if (partition.size() != m.size()) {
    throw InputError("partition covers " + std::to_string(partition.size()) +
                     " nodes but the graph has " + std::to_string(m.size()));
  }
  const double total = m.TotalWeight();
  CheckPositiveWeight(total);
  const std::size_t k = partition.community_count();
  std::vector<double> internal(k, 0.0), incident(k, 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t ci = partition.community_of(i);
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.size(); ++j) {
      incident[ci] += row[j];
      if (partition.community_of(j) == ci) internal[ci] += row[j];
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double share = incident[c] / total;
    q += internal[c] / total - share * share;
  }
  return q;
}

WeightedGraph Coarsen(const WeightedGraph& m, const Partition& partition) {
  if (partition.size() != m.size()) {
    throw InputError("partition covers " + std::to_string(partition.size()) +
                     " nodes but the graph has " + std::to_string(m.size()));
  }
  const std::size_t k = partition.community_count();
  std::vector<double> values(k * k, 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t ci = partition.community_of(i);
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.size(); ++j) {
      values[ci * k + partition.community_of(j)] += row[j];
    }
  }
  WeightedGraph out(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) out.Set(c, d, values[c * k + d]);
  }
  return out;
}

LouvainState::LouvainState(const WeightedGraph& m)
    : LouvainState(m, Partition::Singletons(m.size())) {}

LouvainState::LouvainState(const WeightedGraph& m, const Partition& partition)
    : m_(&m),
      community_(partition.labels().begin(), partition.labels().end()),
      degree_(m.RowSums()),
      internal_(m.size(), 0.0),
      incident_(m.size(), 0.0),
      total_weight_(m.TotalWeight()) {
  if (partition.size() != m.size()) {
    throw InputError("partition does not match the graph");
  }
  CheckPositiveWeight(total_weight_);
  for (std::size_t i = 0; i < m.size(); ++i) {
    incident_[community_[i]] += degree_[i];
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (community_[j] == community_[i]) internal_[community_[i]] += row[j];
    }
  }
}

double LouvainState::LinkWeight(std::size_t node, std::size_t c) const {
  const auto row = m_->row(node);
  double w = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != node && community_[j] == c) w += row[j];
  }
  return w;
}

double LouvainState::DeltaQ(std::size_t node, std::size_t c) const {
  if (c >= size()) {
    throw InputError("unknown community " + std::to_string(c));
  }
  if (community_[node] != kIsolated) {
    throw InputError("node " + std::to_string(node) +
                     " must be removed from its community first");
  }
  return DeltaQ(node, c, LinkWeight(node, c));
}

double LouvainState::DeltaQ(std::size_t node, std::size_t c,
                            double link_weight) const {
  const double two_m = total_weight_;
  const double sigma_in = internal_[c];
  const double sigma_tot = incident_[c];
  const double k = degree_[node];
  const double joined_tot = (sigma_tot + k) / two_m;
  const double apart_tot = sigma_tot / two_m;
  const double alone = k / two_m;
  return ((sigma_in + 2.0 * link_weight) / two_m - joined_tot * joined_tot) -
         (sigma_in / two_m - apart_tot * apart_tot - alone * alone);
}

void LouvainState::Remove(std::size_t node) {
  if (community_[node] == kIsolated) return;
  Remove(node, LinkWeight(node, community_[node]));
}

void LouvainState::Remove(std::size_t node, double link_weight) {
  const std::size_t c = community_[node];
  internal_[c] -= 2.0 * link_weight + (*m_)(node, node);
  incident_[c] -= degree_[node];
  community_[node] = kIsolated;
}

void LouvainState::Insert(std::size_t node, std::size_t c) {
  if (c >= size()) {
    throw InputError("unknown community " + std::to_string(c));
  }
  if (community_[node] != kIsolated) {
    throw InputError("node " + std::to_string(node) + " is already placed");
  }
  Insert(node, c, LinkWeight(node, c));
}

void LouvainState::Insert(std::size_t node, std::size_t c,
                          double link_weight) {
  internal_[c] += 2.0 * link_weight + (*m_)(node, node);
  incident_[c] += degree_[node];
  community_[node] = c;
}

Partition LouvainState::ToPartition() const {
  for (std::size_t c : community_) {
    if (c == kIsolated) throw InputError("a node is detached");
  }
  return Partition::FromLabels(community_);
}

bool LouvainState::CachesConsistent(double tolerance) const {
  const std::size_t n = size();
  std::vector<double> internal(n, 0.0), incident(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (community_[i] == kIsolated) return false;
    incident[community_[i]] += degree_[i];
    const auto row = m_->row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (community_[j] == community_[i]) internal[community_[i]] += row[j];
    }
  }
  double incident_total = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::abs(internal[c] - internal_[c]) > tolerance) return false;
    if (std::abs(incident[c] - incident_[c]) > tolerance) return false;
    incident_total += incident_[c];
  }
  return std::abs(incident_total - total_weight_) <= tolerance;
}

DetectionResult Louvain(const WeightedGraph& graph,
                        const LouvainOptions& options) {
  return DuoLouvain(graph, graph, options);
}

DetectionResult DuoLouvain(const WeightedGraph& neighbors,
                           const WeightedGraph& modularity_matrix,
                           const LouvainOptions& options) {
  CheckSameSize(neighbors, modularity_matrix, "Duo Louvain");
  CheckPositiveWeight(modularity_matrix.TotalWeight());

  const std::size_t n = modularity_matrix.size();
  Rng rng = MakeRng(options.seed);
  std::vector<std::size_t> assignment(n);
  std::iota(assignment.begin(), assignment.end(), std::size_t{0});

  DetectionResult result;
  WeightedGraph level_neighbors = neighbors;
  WeightedGraph level_matrix = modularity_matrix;
  for (std::size_t level = 0;; ++level) {
    LouvainState state(level_matrix);
    result.moves +=
        MoveNodes(level_neighbors, level_matrix, state, rng, level, options);
    const Partition found = state.ToPartition();
    if (found.community_count() == level_matrix.size()) break;
    ++result.levels;
    for (std::size_t& a : assignment) a = found.community_of(a);
    level_neighbors = Coarsen(level_neighbors, found);
    level_matrix = Coarsen(level_matrix, found);
  }
  result.partition = Partition::FromLabels(assignment);
  result.modularity = Modularity(modularity_matrix, result.partition);
  return result;
}

BipolarDetection MultipleBipolarDuoLouvain(const WeightedGraph& graph,
                                           const BipolarMultiGraph& relations,
                                           const PipelineConfig& config,
                                           const LouvainOptions& options) {
  RelationSummary summary = SummarizeRelations(graph, relations, config);
  DetectionResult detection =
      DuoLouvain(graph, summary.modularity_matrix, options);
  return {std::move(detection), std::move(summary)};
}

BipolarDetection MultipleBipolarDuoLouvain(
    const ExtendedMultipleBipolarFuzzyGraph& graph,
    const PipelineConfig& config, const LouvainOptions& options,
    const ShapleyOptions& shapley) {
  ValidateConfig(config);
  const BipolarMultiGraph relations = BuildMulti(graph, config, shapley);
  return MultipleBipolarDuoLouvain(graph.graph, relations, config, options);
}

}  // namespace duolouvain
