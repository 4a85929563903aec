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

#ifndef DUOLOUVAIN_PARTITION_H_
#define DUOLOUVAIN_PARTITION_H_

#include <cstddef>
#include <span>
#include <vector>

namespace duolouvain {

// Assignment of nodes 0..n-1 to communities. Always stored in canonical
// form: labels are 0..k-1 and communities are numbered in order of their
// smallest member, so two partitions are equal iff they group nodes
// identically.
class Partition {
 public:
  Partition() = default;

  // Arbitrary labels; relabelled canonically.
  static Partition FromLabels(std::span<const std::size_t> labels);
  // Throws InputError unless every node in 0..n-1 appears exactly once.
  static Partition FromCommunities(
      std::size_t n, const std::vector<std::vector<std::size_t>>& communities);
  static Partition Singletons(std::size_t n);
  static Partition Whole(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t community_count() const { return count_; }
  std::size_t community_of(std::size_t node) const { return labels_[node]; }
  std::span<const std::size_t> labels() const { return labels_; }

  // Members of each community, each sorted, communities in canonical order.
  std::vector<std::vector<std::size_t>> Communities() const;
  std::vector<std::size_t> CommunitySizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> labels_;
  std::size_t count_ = 0;
};

}  // namespace duolouvain

#endif  // DUOLOUVAIN_PARTITION_H_
