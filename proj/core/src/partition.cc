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

#include "duolouvain/partition.h"

#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "duolouvain/errors.h"

namespace duolouvain {

Partition Partition::FromLabels(std::span<const std::size_t> labels) {
  Partition p;
  p.labels_.resize(labels.size());
  std::unordered_map<std::size_t, std::size_t> canonical;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = canonical.try_emplace(labels[i], canonical.size());
    p.labels_[i] = it->second;
  }
  p.count_ = canonical.size();
  return p;
}

Partition Partition::FromCommunities(
    std::size_t n, const std::vector<std::vector<std::size_t>>& communities) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> labels(n, kUnset);
  for (std::size_t c = 0; c < communities.size(); ++c) {
    if (communities[c].empty()) throw InputError("empty community");
    for (std::size_t node : communities[c]) {
      if (node >= n) {
        throw InputError("node " + std::to_string(node + 1) +
                         " is outside 1.." + std::to_string(n));
      }
      if (labels[node] != kUnset) {
        throw InputError("node " + std::to_string(node + 1) +
                         " appears in more than one community");
      }
      labels[node] = c;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == kUnset) {
      throw InputError("node " + std::to_string(i + 1) +
                       " is not assigned to any community");
    }
  }
  return FromLabels(labels);
}

Partition Partition::Singletons(std::size_t n) {
  Partition p;
  p.labels_.resize(n);
  std::iota(p.labels_.begin(), p.labels_.end(), std::size_t{0});
  p.count_ = n;
  return p;
}

Partition Partition::Whole(std::size_t n) {
  Partition p;
  p.labels_.assign(n, 0);
  p.count_ = n == 0 ? 0 : 1;
  return p;
}

std::vector<std::vector<std::size_t>> Partition::Communities() const {
  std::vector<std::vector<std::size_t>> out(count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
  return out;
}

std::vector<std::size_t> Partition::CommunitySizes() const {
  std::vector<std::size_t> sizes(count_, 0);
  for (std::size_t label : labels_) ++sizes[label];
  return sizes;
}

}  // namespace duolouvain
