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

#ifndef SURROGRAPH_SYNTHETIC_H_
#define SURROGRAPH_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "surrograph/graph.h"
#include "surrograph/rng.h"

namespace surrograph {

// Zachary's karate club: 34 members (ids "1".."34"), 78 ties, no labels.
PropertyGraph karate_graph();

// Closeness centrality, (r - 1) / sum of distances over the r vertices
// reachable from v (0 for isolated vertices).
std::vector<double> closeness_centrality(const PropertyGraph& g);

// Sample quantile with linear interpolation between order statistics
// (the "type 7" definition). p in [0, 1].
double quantile(std::vector<double> values, double p);

// Replaces g's labels with two sampled ones: `label1` (3 levels, weighted
// toward the vertex's degree tertile) and `label2` (4 levels, weighted toward
// its closeness quartile). The matching level gets probability 0.7 and the
// rest share 0.3 evenly. Node ids are kept.
PropertyGraph with_synthetic_labels(const PropertyGraph& g, std::uint64_t seed);

// with_synthetic_labels on karate_graph().
PropertyGraph karate_with_synthetic_labels(std::uint64_t seed);

// Two-block graph with label `specialty` in {A, B}: n_a vertices of A, the
// rest B, and independent edges with the given within/between probabilities.
struct TwoBlockParams {
  std::size_t n = 200;
  std::size_t n_a = 100;
  double p_aa = 0.10;
  double p_bb = 0.04;
  double p_ab = 0.03;
};
PropertyGraph two_block_graph(const TwoBlockParams& params, std::uint64_t seed);

// Planted-partition graph with exactly `m` edges: vertex v belongs to group
// v % groups (label `group`), and each edge is within-group with probability
// `p_within`. A second label `kind` in {x, y} is drawn uniformly.
struct PlantedParams {
  std::size_t n = 1000;
  std::size_t m = 5000;
  std::uint32_t groups = 4;
  double p_within = 0.8;
};
PropertyGraph planted_partition_graph(const PlantedParams& params, std::uint64_t seed);

// Random labeled simple graph: 1..max_vertices vertices, up to max_edges
// edges, 1..max_labels labels of 1..max_levels values each.
struct RandomGraphParams {
  std::size_t max_vertices = 50;
  std::size_t max_edges = 200;
  std::size_t max_labels = 3;
  std::size_t max_levels = 3;
};
PropertyGraph random_labeled_graph(const RandomGraphParams& params, Rng& rng);

}  // namespace surrograph

#endif  // SURROGRAPH_SYNTHETIC_H_
