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

#include "surrograph/synthetic.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "surrograph/error.h"

namespace surrograph {

namespace {

// 1-indexed tie list.
constexpr std::array<std::array<int, 2>, 78> kKarateEdges = {{
    {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 9},
    {1, 11},  {1, 12},  {1, 13},  {1, 14},  {1, 18},  {1, 20},  {1, 22},  {1, 32},
    {2, 3},   {2, 4},   {2, 8},   {2, 14},  {2, 18},  {2, 20},  {2, 22},  {2, 31},
    {3, 4},   {3, 8},   {3, 9},   {3, 10},  {3, 14},  {3, 28},  {3, 29},  {3, 33},
    {4, 8},   {4, 13},  {4, 14},  {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},
    {7, 17},  {9, 31},  {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34},
    {16, 33}, {16, 34}, {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33},
    {23, 34}, {24, 26}, {24, 28}, {24, 30}, {24, 33}, {24, 34}, {25, 26}, {25, 28},
    {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32}, {29, 34}, {30, 33},
    {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34},
}};

// Index of the first cut the value does not exceed.
std::uint32_t bucket(double value, const std::vector<double>& cuts) {
  std::uint32_t b = 0;
  while (b < cuts.size() && value > cuts[b]) ++b;
  return b;
}

// Draws a level: `home` with probability p_home, others uniformly.
std::uint32_t weighted_level(Rng& rng, std::uint32_t home, std::uint32_t levels,
                             double p_home) {
  if (rng.uniform01() < p_home) return home;
  const auto other = static_cast<std::uint32_t>(rng.uniform(levels - 1));
  return other < home ? other : other + 1;
}

Label numbered_label(std::string name, std::uint32_t levels) {
  Label label{std::move(name), {}};
  for (std::uint32_t i = 1; i <= levels; ++i) label.domain.push_back(std::to_string(i));
  return label;
}

}  // namespace

PropertyGraph karate_graph() {
  std::vector<Edge> edges;
  for (const auto& [a, b] : kKarateEdges) {
    edges.push_back(make_edge(static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1)));
  }
  std::vector<std::string> ids;
  for (int i = 1; i <= 34; ++i) ids.push_back(std::to_string(i));
  return PropertyGraph(34, std::move(edges), LabelSchema(), {}, std::move(ids));
}

std::vector<double> closeness_centrality(const PropertyGraph& g) {
  std::vector<double> out(g.num_vertices(), 0.0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto dist = bfs_distances(g, v);
    std::size_t reached = 0;
    std::size_t total = 0;
    for (std::size_t d : dist) {
      if (d == std::numeric_limits<std::size_t>::max() || d == 0) continue;
      ++reached;
      total += d;
    }
    if (total > 0) out[v] = static_cast<double>(reached) / static_cast<double>(total);
  }
  return out;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw InputError("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("quantile probability outside [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = p * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

PropertyGraph with_synthetic_labels(const PropertyGraph& g, std::uint64_t seed) {
  if (g.num_vertices() == 0) throw InputError("synthetic labels need at least one vertex");
  const std::size_t n = g.num_vertices();
  std::vector<double> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = static_cast<double>(g.degree(v));
  const std::vector<double> closeness = closeness_centrality(g);

  const std::vector<double> degree_cuts{quantile(degree, 1.0 / 3.0),
                                        quantile(degree, 2.0 / 3.0)};
  const std::vector<double> closeness_cuts{quantile(closeness, 0.25),
                                           quantile(closeness, 0.5),
                                           quantile(closeness, 0.75)};

  Rng rng = Rng::for_stream(seed, Stream::kLabelSynthesis);
  std::vector<std::uint32_t> values(n * 2);
  for (VertexId v = 0; v < n; ++v) {
    values[v * 2] = weighted_level(rng, bucket(degree[v], degree_cuts), 3, 0.7);
    values[v * 2 + 1] = weighted_level(rng, bucket(closeness[v], closeness_cuts), 4, 0.7);
  }
  LabelSchema schema({numbered_label("label1", 3), numbered_label("label2", 4)});
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return PropertyGraph(n, std::move(edges), std::move(schema), std::move(values),
                       g.node_ids());
}

PropertyGraph karate_with_synthetic_labels(std::uint64_t seed) {
  return with_synthetic_labels(karate_graph(), seed);
}

PropertyGraph two_block_graph(const TwoBlockParams& params, std::uint64_t seed) {
  if (params.n_a > params.n) throw InputError("block size exceeds vertex count");
  Rng rng = Rng::for_stream(seed, Stream::kFixture, {1});
  std::vector<std::uint32_t> values(params.n);
  for (std::size_t v = 0; v < params.n; ++v) values[v] = v < params.n_a ? 0 : 1;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < params.n; ++u) {
    for (VertexId v = u + 1; v < params.n; ++v) {
      const double p = values[u] != values[v] ? params.p_ab
                       : values[u] == 0       ? params.p_aa
                                              : params.p_bb;
      if (rng.uniform01() < p) edges.push_back({u, v});
    }
  }
  LabelSchema schema({Label{"specialty", {"A", "B"}}});
  return PropertyGraph(params.n, std::move(edges), std::move(schema), std::move(values));
}

PropertyGraph planted_partition_graph(const PlantedParams& params, std::uint64_t seed) {
  const std::size_t n = params.n;
  const std::uint32_t k = params.groups;
  if (n < 2 || k < 1 || k > n) throw InputError("planted partition needs 1 <= groups <= n, n >= 2");
  // Capacity check is loose; the sampler below rejects duplicates and would
  // stall near saturation.
  if (params.m > n * (n - 1) / 4) throw InputError("planted partition too dense");
  Rng rng = Rng::for_stream(seed, Stream::kFixture, {2});
  std::vector<std::uint32_t> values(n * 2);
  for (std::size_t v = 0; v < n; ++v) {
    values[v * 2] = static_cast<std::uint32_t>(v % k);
    values[v * 2 + 1] = static_cast<std::uint32_t>(rng.uniform(2));
  }
  const std::size_t per_group = n / k;  // vertices g, g+k, g+2k, ...
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(params.m);
  while (edges.size() < params.m) {
    VertexId a;
    VertexId b;
    if (per_group >= 2 && rng.uniform01() < params.p_within) {
      const auto grp = rng.uniform(k);
      a = static_cast<VertexId>(grp + k * rng.uniform(per_group));
      b = static_cast<VertexId>(grp + k * rng.uniform(per_group));
    } else {
      a = static_cast<VertexId>(rng.uniform(n));
      b = static_cast<VertexId>(rng.uniform(n));
    }
    if (a == b) continue;
    const Edge e = make_edge(a, b);
    if (seen.insert(edge_key(e)).second) edges.push_back(e);
  }
  Label group = numbered_label("group", k);
  LabelSchema schema({std::move(group), Label{"kind", {"x", "y"}}});
  return PropertyGraph(n, std::move(edges), std::move(schema), std::move(values));
}

PropertyGraph random_labeled_graph(const RandomGraphParams& params, Rng& rng) {
  const std::size_t n = 1 + rng.uniform(params.max_vertices);
  const std::size_t labels = 1 + rng.uniform(params.max_labels);
  std::vector<Label> schema;
  for (std::size_t k = 0; k < labels; ++k) {
    Label label{"l" + std::to_string(k), {}};
    const std::size_t levels = 1 + rng.uniform(params.max_levels);
    for (std::size_t i = 0; i < levels; ++i) label.domain.push_back("v" + std::to_string(i));
    schema.push_back(std::move(label));
  }
  std::vector<std::uint32_t> values(n * labels);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < labels; ++k) {
      values[v * labels + k] = static_cast<std::uint32_t>(rng.uniform(schema[k].domain.size()));
    }
  }
  const std::size_t capacity = n * (n - 1) / 2;
  const std::size_t target = std::min(capacity, rng.uniform(params.max_edges + 1));
  // Partial Fisher-Yates over pair indices keeps dense cases cheap.
  std::vector<Edge> all;
  all.reserve(capacity);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  for (std::size_t i = 0; i < target; ++i) {
    std::swap(all[i], all[i + rng.uniform(all.size() - i)]);
  }
  all.resize(target);
  return PropertyGraph(n, std::move(all), LabelSchema(std::move(schema)), std::move(values));
}

}  // namespace surrograph
