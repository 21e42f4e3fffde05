// Copyright 2026 The Surrograph Authors.
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

#ifndef SURROGRAPH_TESTS_ORACLES_H_
#define SURROGRAPH_TESTS_ORACLES_H_

// Brute-force reference computations. These deliberately avoid the library's
// data structures (CSR adjacency, category ids) and work from the raw edge
// list and label vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "surrograph/graph.h"
#include "surrograph/label_model.h"
#include "surrograph/metrics.h"

namespace surrograph::oracle {

using LabelVector = std::vector<std::uint32_t>;

inline LabelVector labels_of(const PropertyGraph& g, VertexId v) {
  LabelVector out;
  for (std::size_t k = 0; k < g.schema().size(); ++k) out.push_back(g.label(v, k));
  return out;
}

inline std::vector<std::vector<int>> adjacency_matrix(const PropertyGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline std::map<LabelVector, std::uint64_t> vertex_counts(const PropertyGraph& g) {
  std::map<LabelVector, std::uint64_t> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) ++out[labels_of(g, v)];
  return out;
}

// Edge counts over unordered label-vector pairs, scanning every vertex pair.
inline std::map<std::pair<LabelVector, LabelVector>, std::uint64_t> edge_counts(
    const PropertyGraph& g) {
  const auto a = adjacency_matrix(g);
  std::map<std::pair<LabelVector, LabelVector>, std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!a[i][j]) continue;
      auto x = labels_of(g, static_cast<VertexId>(i));
      auto y = labels_of(g, static_cast<VertexId>(j));
      if (y < x) std::swap(x, y);
      ++out[{x, y}];
    }
  }
  return out;
}

// Library distributions translated back into label-vector keys.
inline std::map<LabelVector, std::uint64_t> translate(const JointCategoryIndex& index,
                                                      const VertexCategoryDistribution& p) {
  std::map<LabelVector, std::uint64_t> out;
  for (const auto& [c, n] : p.counts) {
    if (n > 0) out[index.labels_of(c)] = n;
  }
  return out;
}

inline std::map<std::pair<LabelVector, LabelVector>, std::uint64_t> translate(
    const JointCategoryIndex& index, const EdgeCategoryDistribution& p) {
  std::map<std::pair<LabelVector, LabelVector>, std::uint64_t> out;
  for (const auto& [pair, n] : p.counts) {
    auto x = index.labels_of(pair.first);
    auto y = index.labels_of(pair.second);
    if (y < x) std::swap(x, y);
    if (n > 0) out[{x, y}] = n;
  }
  return out;
}

// P(deg >= d) by direct counting for every d.
inline std::vector<double> ccdf(const PropertyGraph& g) {
  const auto a = adjacency_matrix(g);
  std::vector<int> deg(a.size(), 0);
  int top = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    deg[i] = std::accumulate(a[i].begin(), a[i].end(), 0);
    top = std::max(top, deg[i]);
  }
  std::vector<double> out;
  for (int d = 0; d <= top; ++d) {
    const auto count = std::count_if(deg.begin(), deg.end(), [d](int x) { return x >= d; });
    out.push_back(static_cast<double>(count) / static_cast<double>(a.size()));
  }
  return out;
}

// Modularity as the exact rational sum_ij (2m A_ij - k_i k_j) [c_i = c_j] / (2m)^2.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Rational modularity(const PropertyGraph& g, const std::vector<std::uint32_t>& community) {
  const auto a = adjacency_matrix(g);
  const std::int64_t two_m = 2 * static_cast<std::int64_t>(g.num_edges());
  std::vector<std::int64_t> k(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) k[i] = std::accumulate(a[i].begin(), a[i].end(), 0);
  Rational q{0, two_m * two_m};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (community[i] == community[j]) q.num += two_m * a[i][j] - k[i] * k[j];
    }
  }
  return q;
}

// Calls fn on every set partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> rgs(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) {
    if (i == n) {
      fn(rgs);
      return;
    }
    for (std::uint32_t c = 0; c <= used; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) {
    fn(rgs);
    return;
  }
  rgs[0] = 0;
  rec(1, 1);
}

// Best modularity over all partitions, with the partition attaining it.
inline std::pair<double, std::vector<std::uint32_t>> best_partition(const PropertyGraph& g) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> arg;
  for_each_partition(g.num_vertices(), [&](const std::vector<std::uint32_t>& p) {
    const double q = modularity(g, p).value();
    if (q > best + 1e-15) {
      best = q;
      arg = p;
    }
  });
  return {best, arg};
}

}  // namespace surrograph::oracle

#endif  // SURROGRAPH_TESTS_ORACLES_H_
