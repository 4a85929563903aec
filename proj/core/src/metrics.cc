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

#include "duolouvain/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "duolouvain/errors.h"

namespace duolouvain {

ContingencyTable ContingencyTable::Build(const Partition& x,
                                         const Partition& y) {
  if (x.size() != y.size()) {
    throw InputError("partitions cover different node sets (" +
                     std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()) + " nodes)");
  }
  ContingencyTable t;
  t.counts.assign(x.community_count(),
                  std::vector<std::size_t>(y.community_count(), 0));
  t.row_totals.assign(x.community_count(), 0);
  t.column_totals.assign(y.community_count(), 0);
  t.total = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t a = x.community_of(i);
    const std::size_t b = y.community_of(i);
    ++t.counts[a][b];
    ++t.row_totals[a];
    ++t.column_totals[b];
  }
  return t;
}

double Entropy(const Partition& p) {
  if (p.size() == 0) throw InputError("entropy of an empty partition");
  const double n = static_cast<double>(p.size());
  // Sorted sizes make the result independent of label order.
  std::vector<std::size_t> sizes = p.CommunitySizes();
  std::sort(sizes.begin(), sizes.end());
  double h = 0.0;
  for (std::size_t size : sizes) {
    const double q = static_cast<double>(size) / n;
    h -= q * std::log(q);
  }
  return std::max(h, 0.0);
}

double MutualInformation(const Partition& x, const Partition& y) {
  const ContingencyTable t = ContingencyTable::Build(x, y);
  if (t.total == 0) return 0.0;
  const double n = static_cast<double>(t.total);
  // Terms are summed in sorted order so that MI(X, Y) == MI(Y, X) exactly.
  std::vector<double> terms;
  for (std::size_t a = 0; a < t.counts.size(); ++a) {
    for (std::size_t b = 0; b < t.counts[a].size(); ++b) {
      const std::size_t joint = t.counts[a][b];
      if (joint == 0) continue;
      // P(x,y) / (P(x) P(y)) = n * n_xy / (n_x * n_y)
      const double ratio = n * static_cast<double>(joint) /
                           (static_cast<double>(t.row_totals[a]) *
                            static_cast<double>(t.column_totals[b]));
      terms.push_back(static_cast<double>(joint) / n * std::log(ratio));
    }
  }
  std::sort(terms.begin(), terms.end());
  double mi = 0.0;
  for (double term : terms) mi += term;
  return std::max(mi, 0.0);
}

double NormalizedMutualInformation(const Partition& x, const Partition& y) {
  if (x == y) return 1.0;
  const double hx = Entropy(x);
  const double hy = Entropy(y);
  const double mi = MutualInformation(x, y);
  if (hx + hy == 0.0) return 1.0;
  // Exactly one trivial partition gives MI = 0 and hence 0 below.
  return std::clamp(2.0 * mi / (hx + hy), 0.0, 1.0);
}

}  // namespace duolouvain
