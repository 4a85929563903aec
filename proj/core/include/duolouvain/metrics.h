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

#ifndef DUOLOUVAIN_METRICS_H_
#define DUOLOUVAIN_METRICS_H_

#include <cstddef>
#include <vector>

#include "duolouvain/partition.h"

namespace duolouvain {

// Joint community counts of two partitions of the same nodes.
struct ContingencyTable {
  std::vector<std::vector<std::size_t>> counts;  // [x][y]
  std::vector<std::size_t> row_totals;           // n_x
  std::vector<std::size_t> column_totals;        // n_y
  std::size_t total = 0;

  // Throws InputError if the partitions cover different node counts.
  static ContingencyTable Build(const Partition& x, const Partition& y);
};

// All information quantities are in nats.
double Entropy(const Partition& p);
double MutualInformation(const Partition& x, const Partition& y);

// 2 MI / (H(X) + H(Y)). When both entropies vanish the partitions are both
// the single whole-set community and NMI is 1.
double NormalizedMutualInformation(const Partition& x, const Partition& y);

}  // namespace duolouvain

#endif  // DUOLOUVAIN_METRICS_H_
