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

#ifndef SURROGRAPH_GENERATOR_H_
#define SURROGRAPH_GENERATOR_H_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "surrograph/graph.h"
#include "surrograph/label_model.h"
#include "surrograph/rng.h"

namespace surrograph {

enum class AllocationMode {
  // Largest-remainder rounding of the expected counts; exact when the target
  // size equals the source size.
  kDeterministic,
  // I.i.d. draws from the distribution.
  kMultinomial,
};

struct GenerationConfig {
  std::uint64_t n_vertices = 1;
  std::uint64_t n_edges = 0;
  std::uint64_t seed = 0;
  AllocationMode vertex_allocation = AllocationMode::kDeterministic;
  AllocationMode edge_allocation = AllocationMode::kDeterministic;
  std::uint32_t retry_budget = 100;

  // Throws InputError when n_vertices < 1 or retry_budget < 1.
  void validate() const;
};

// Sparse per-category counts. Keys with a zero count are kept when the
// category has positive probability but received no seat.
using CategoryCounts = std::map<CategoryId, std::uint64_t>;

// Splits `seats` proportionally to integer `weights` (largest remainder,
// ties to the lower key). Exact integer arithmetic.
template <typename Key>
std::map<Key, std::uint64_t> largest_remainder(
    const std::map<Key, std::uint64_t>& weights, std::uint64_t seats);

CategoryCounts allocate_vertices(const VertexCategoryDistribution& p_l,
                                 std::uint64_t n_vertices, AllocationMode mode,
                                 Rng& rng);

// C2V: generated vertex ids per category, assigned in contiguous blocks in
// ascending category order.
class CategoryToVertexMap {
 public:
  CategoryToVertexMap() = default;
  explicit CategoryToVertexMap(const CategoryCounts& counts);

  std::span<const VertexId> vertices(CategoryId c) const;
  const std::map<CategoryId, std::vector<VertexId>>& lists() const { return lists_; }
  std::size_t num_vertices() const { return num_vertices_; }

 private:
  std::map<CategoryId, std::vector<VertexId>> lists_;
  std::size_t num_vertices_ = 0;
};

CategoryToVertexMap build_category_to_vertex_map(const CategoryCounts& counts);

struct GenerationReport {
  std::uint64_t edges_requested = 0;
  std::uint64_t edges_placed = 0;
  std::uint64_t edges_abandoned = 0;
  std::uint64_t retries_total = 0;
  std::map<CategoryPair, std::uint64_t> abandoned_by_pair;
  // Wall time; never serialized so that written reports stay byte-stable.
  std::chrono::nanoseconds elapsed{0};
};

struct EdgeSample {
  std::vector<Edge> edges;
  GenerationReport report;
};

// Fills m_t edge slots. Each slot's category pair comes from p_c; endpoints
// are drawn uniformly from the pair's vertex lists; self-loops and
// duplicates are redrawn up to retry_budget times, then the slot is
// abandoned. Slots whose pair has an empty vertex list are abandoned
// without retries.
EdgeSample sample_edges(const EdgeCategoryDistribution& p_c,
                        const CategoryToVertexMap& c2v, std::uint64_t n_edges,
                        std::uint32_t retry_budget, AllocationMode mode, Rng& rng);

struct GeneratedGraph {
  PropertyGraph graph;
  GenerationReport report;
};

// Vertex allocation and edge sampling draw from distinct streams of
// config.seed. The output is anonymous and carries the index's schema.
GeneratedGraph generate_graph(const JointCategoryIndex& index,
                              const VertexCategoryDistribution& p_l,
                              const EdgeCategoryDistribution& p_c,
                              const GenerationConfig& config);

// Estimates P_L and P_C from `source` (over its own schema) and generates.
// An edgeless source yields an edgeless graph.
GeneratedGraph generate_like(const PropertyGraph& source,
                             const GenerationConfig& config);

// CSV `key,value` rows (edges_requested, edges_placed, ...), then one
// `abandoned_pair:<a>:<b>,<count>` row per pair.
void write_report_csv(std::ostream& out, const GenerationReport& report);
void write_report_jsonl(std::ostream& out, const GenerationReport& report);

template <typename Key>
std::map<Key, std::uint64_t> largest_remainder(
    const std::map<Key, std::uint64_t>& weights, std::uint64_t seats) {
  std::map<Key, std::uint64_t> out;
  unsigned __int128 total = 0;
  for (const auto& [k, w] : weights) total += w;
  if (total == 0) return out;
  struct Remainder {
    unsigned __int128 value;
    Key key;
  };
  std::vector<Remainder> remainders;
  std::uint64_t assigned = 0;
  for (const auto& [k, w] : weights) {
    if (w == 0) continue;
    const unsigned __int128 scaled = static_cast<unsigned __int128>(seats) * w;
    const auto whole = static_cast<std::uint64_t>(scaled / total);
    out[k] = whole;
    assigned += whole;
    remainders.push_back({scaled % total, k});
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const Remainder& a, const Remainder& b) {
                     return a.value > b.value;
                   });
  for (std::uint64_t i = 0; assigned < seats; ++i, ++assigned) {
    ++out[remainders[i].key];
  }
  return out;
}

}  // namespace surrograph

#endif  // SURROGRAPH_GENERATOR_H_
