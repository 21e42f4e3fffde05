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

#ifndef SURROGRAPH_LABEL_MODEL_H_
#define SURROGRAPH_LABEL_MODEL_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "surrograph/graph.h"

namespace surrograph {

using CategoryId = std::uint64_t;

// Mixed-radix enumeration of the joint label space. Category ids follow
// lexicographic order over (schema order, domain order): the first label is
// the most significant digit.
class JointCategoryIndex {
 public:
  // Throws InputError if any domain is empty or the product overflows.
  explicit JointCategoryIndex(LabelSchema schema);

  CategoryId size() const { return size_; }
  const LabelSchema& schema() const { return schema_; }

  CategoryId category_of(std::span<const std::uint32_t> label_vector) const;
  std::vector<std::uint32_t> labels_of(CategoryId c) const;

  // Category of vertex v; throws InputError when g's schema differs.
  CategoryId category_of_vertex(const PropertyGraph& g, VertexId v) const;
  // Throws InputError unless g's schema equals this index's schema.
  void check_conforms(const PropertyGraph& g) const;

 private:
  LabelSchema schema_;
  std::vector<CategoryId> strides_;
  CategoryId size_ = 1;
};

// Unordered category pair, stored with first <= second.
struct CategoryPair {
  CategoryId first = 0;
  CategoryId second = 0;

  friend auto operator<=>(const CategoryPair&, const CategoryPair&) = default;
};

inline CategoryPair make_pair_key(CategoryId a, CategoryId b) {
  return a <= b ? CategoryPair{a, b} : CategoryPair{b, a};
}

// Empirical P_L kept as exact integer counts so that allocation can use
// integer arithmetic. Only observed categories are stored.
struct VertexCategoryDistribution {
  std::map<CategoryId, std::uint64_t> counts;
  std::uint64_t total = 0;

  double probability(CategoryId c) const;
  double probability_sum() const;
};

// Empirical P_C over unordered category pairs; each edge counted once.
struct EdgeCategoryDistribution {
  std::map<CategoryPair, std::uint64_t> counts;
  std::uint64_t total = 0;

  double probability(const CategoryPair& p) const;
  double probability_sum() const;
};

JointCategoryIndex enumerate_joint_categories(const LabelSchema& schema);

// Throws InputError on an empty graph or non-conforming labels.
VertexCategoryDistribution estimate_vertex_category_distribution(
    const PropertyGraph& g, const JointCategoryIndex& index);

// Throws InputError on an edgeless graph (P_C undefined).
EdgeCategoryDistribution estimate_edge_category_distribution(
    const PropertyGraph& g, const JointCategoryIndex& index);

// Half the L1 distance between two edge distributions.
double total_variation(const EdgeCategoryDistribution& a,
                       const EdgeCategoryDistribution& b);

// Audit tables: one column per label (label_<name>), then `probability`.
// Edge tables prefix the two endpoint categories with a_ and b_.
void write_distribution_csv(std::ostream& out, const JointCategoryIndex& index,
                            const VertexCategoryDistribution& p_l);
void write_distribution_csv(std::ostream& out, const JointCategoryIndex& index,
                            const EdgeCategoryDistribution& p_c);

}  // namespace surrograph

#endif  // SURROGRAPH_LABEL_MODEL_H_
