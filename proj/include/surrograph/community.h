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

#ifndef SURROGRAPH_COMMUNITY_H_
#define SURROGRAPH_COMMUNITY_H_

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "surrograph/graph.h"

namespace surrograph {

// Non-overlapping partition. Ids are contiguous 0..K-1, numbered in order of
// each community's lowest vertex id.
class CommunityAssignment {
 public:
  CommunityAssignment() = default;
  // Renumbers arbitrary ids canonically.
  explicit CommunityAssignment(const std::vector<std::uint32_t>& membership);

  std::uint32_t community_of(VertexId v) const { return membership_[v]; }
  const std::vector<std::uint32_t>& membership() const { return membership_; }
  std::size_t num_vertices() const { return membership_.size(); }
  std::uint32_t count() const { return count_; }
  // Community sizes, sorted descending.
  std::vector<std::size_t> sizes() const;

  friend bool operator==(const CommunityAssignment&, const CommunityAssignment&) = default;

 private:
  std::vector<std::uint32_t> membership_;
  std::uint32_t count_ = 0;
};

enum class CommunityAlgorithm { kNone, kEdgeBetweenness, kFastGreedy };

CommunityAlgorithm parse_community_algorithm(std::string_view name);
std::string_view to_string(CommunityAlgorithm algorithm);

// Q = sum_c [e_c/m - (d_c/2m)^2]. Throws InputError when m = 0 or the
// assignment does not cover g.
double modularity(const PropertyGraph& g, const CommunityAssignment& assignment);

// Brandes edge betweenness, index-aligned with g.edges(); each unordered
// vertex pair contributes once. `removed` masks edges out of the graph.
std::vector<double> edge_betweenness(const PropertyGraph& g,
                                     const std::vector<bool>& removed);

// Girvan-Newman divisive clustering. Repeatedly removes the edge of highest
// betweenness (lowest edge index among ties), records every split, and
// returns the split with the highest modularity on the original graph
// (earliest among ties). Throws InputError on a vertexless graph; an
// edgeless graph yields singletons.
CommunityAssignment edge_betweenness_communities(const PropertyGraph& g);

// Clauset-Newman-Moore agglomeration: merges the community pair with the
// largest modularity gain while the gain is positive. Gains are compared as
// exact integers; ties go to the lexicographically smallest (id, id) pair.
// Throws InputError on an edgeless graph.
CommunityAssignment greedy_modularity_communities(const PropertyGraph& g);

// Dispatches on algorithm; kNone returns a single community.
CommunityAssignment detect_communities(const PropertyGraph& g,
                                       CommunityAlgorithm algorithm);

// Fraction of v's neighbors u for which v is u's only neighbor carrying v's
// value of `attribute`. Isolated vertices score 0. Throws InputError on an
// unknown attribute.
std::vector<double> linchpin_centrality(const PropertyGraph& g,
                                        std::string_view attribute);

// `node_id,community` rows.
void write_communities_csv(std::ostream& out, const PropertyGraph& g,
                           const CommunityAssignment& assignment);

}  // namespace surrograph

#endif  // SURROGRAPH_COMMUNITY_H_
