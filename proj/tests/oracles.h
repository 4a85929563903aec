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

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it is used to check.
#ifndef DUOLOUVAIN_TESTS_ORACLES_H_
#define DUOLOUVAIN_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace duolouvain::testing {

// Shapley values as the average marginal contribution over all n!
// orderings. `value` maps a subset bitmask to the game value.
inline std::vector<double> PermutationShapley(
    std::size_t n, const std::function<double(std::uint64_t)>& value) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> total(n, 0.0);
  std::size_t count = 0;
  do {
    std::uint64_t s = 0;
    for (std::size_t p : order) {
      const double before = value(s);
      s |= std::uint64_t{1} << p;
      total[p] += value(s) - before;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& t : total) t /= static_cast<double>(count);
  return total;
}

// A random monotone table with v(empty) = 0 and v(full) = 1: each subset
// takes the max over its immediate subsets plus a nonnegative increment, and
// the table is then rescaled.
inline std::vector<double> RandomMonotoneTable(std::size_t n,
                                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> inc(0.0, 1.0);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<double> t(full + 1, 0.0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    double floor = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (std::uint64_t{1} << i)) {
        floor = std::max(floor, t[s & ~(std::uint64_t{1} << i)]);
      }
    }
    t[s] = floor + inc(rng);
  }
  const double top = t[full];
  for (double& v : t) v /= top;
  t[full] = 1.0;
  return t;
}

// Modularity straight from the double sum over node pairs.
inline double BruteForceModularity(const std::vector<std::vector<double>>& w,
                                   const std::vector<std::size_t>& labels) {
  const std::size_t n = w.size();
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += w[i][j];
      two_m += w[i][j];
    }
  }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i] == labels[j]) q += w[i][j] - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

// Calls `visit` with every set partition of n nodes, as restricted growth
// label strings.
inline void ForEachSetPartition(
    std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> labels(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t used) {
    if (i == n) {
      visit(labels);
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      labels[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) return;
  labels[0] = 0;
  rec(1, 1);
}

inline double ExhaustiveMaxModularity(const std::vector<std::vector<double>>& w) {
  double best = -1.0;
  ForEachSetPartition(w.size(), [&](const std::vector<std::size_t>& labels) {
    best = std::max(best, BruteForceModularity(w, labels));
  });
  return best;
}

// NMI computed from label vectors with base-2 logarithms.
inline double Log2Nmi(const std::vector<std::size_t>& x,
                      const std::vector<std::size_t>& y) {
  const double n = static_cast<double>(x.size());
  std::map<std::size_t, double> px, py;
  std::map<std::pair<std::size_t, std::size_t>, double> pxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    px[x[i]] += 1.0 / n;
    py[y[i]] += 1.0 / n;
    pxy[{x[i], y[i]}] += 1.0 / n;
  }
  double hx = 0.0, hy = 0.0, mi = 0.0;
  for (auto& [_, p] : px) hx -= p * std::log2(p);
  for (auto& [_, p] : py) hy -= p * std::log2(p);
  for (auto& [key, p] : pxy) mi += p * std::log2(p / (px[key.first] * py[key.second]));
  return 2.0 * mi / (hx + hy);
}

}  // namespace duolouvain::testing

#endif  // DUOLOUVAIN_TESTS_ORACLES_H_
