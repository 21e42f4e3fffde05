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

#include "surrograph/label_model.h"

#include <cmath>
#include <limits>
#include <ostream>
#include <set>

#include "surrograph/error.h"
#include "surrograph/format.h"

namespace surrograph {

JointCategoryIndex::JointCategoryIndex(LabelSchema schema)
    : schema_(std::move(schema)) {
  const std::size_t m = schema_.size();
  strides_.assign(m, 1);
  for (std::size_t i = m; i-- > 0;) {
    const std::uint64_t n = schema_[i].domain.size();
    if (n == 0) {
      throw InputError("label '" + schema_[i].name + "' has an empty domain");
    }
    strides_[i] = size_;
    if (size_ > std::numeric_limits<CategoryId>::max() / n) {
      throw InputError("joint label space is too large to enumerate");
    }
    size_ *= n;
  }
}

CategoryId JointCategoryIndex::category_of(
    std::span<const std::uint32_t> label_vector) const {
  if (label_vector.size() != schema_.size()) {
    throw InputError("label vector length does not match the schema");
  }
  CategoryId c = 0;
  for (std::size_t k = 0; k < label_vector.size(); ++k) {
    if (label_vector[k] >= schema_[k].domain.size()) {
      throw InputError("value outside the domain of label '" + schema_[k].name + "'");
    }
    c += strides_[k] * label_vector[k];
  }
  return c;
}

std::vector<std::uint32_t> JointCategoryIndex::labels_of(CategoryId c) const {
  if (c >= size_) throw InputError("category id out of range");
  std::vector<std::uint32_t> out(schema_.size());
  for (std::size_t k = 0; k < schema_.size(); ++k) {
    out[k] = static_cast<std::uint32_t>(c / strides_[k]);
    c %= strides_[k];
  }
  return out;
}

void JointCategoryIndex::check_conforms(const PropertyGraph& g) const {
  if (!(g.schema() == schema_)) {
    throw InputError("graph labels do not conform to the category index schema");
  }
}

CategoryId JointCategoryIndex::category_of_vertex(const PropertyGraph& g,
                                                  VertexId v) const {
  return category_of(g.label_vector(v));
}

double VertexCategoryDistribution::probability(CategoryId c) const {
  auto it = counts.find(c);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

double VertexCategoryDistribution::probability_sum() const {
  double s = 0.0;
  for (const auto& [c, n] : counts) s += static_cast<double>(n) / static_cast<double>(total);
  return s;
}

double EdgeCategoryDistribution::probability(const CategoryPair& p) const {
  auto it = counts.find(p);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

double EdgeCategoryDistribution::probability_sum() const {
  double s = 0.0;
  for (const auto& [p, n] : counts) s += static_cast<double>(n) / static_cast<double>(total);
  return s;
}

JointCategoryIndex enumerate_joint_categories(const LabelSchema& schema) {
  return JointCategoryIndex(schema);
}

VertexCategoryDistribution estimate_vertex_category_distribution(
    const PropertyGraph& g, const JointCategoryIndex& index) {
  if (g.num_vertices() == 0) throw InputError("cannot estimate P_L on an empty graph");
  index.check_conforms(g);
  VertexCategoryDistribution out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    ++out.counts[index.category_of_vertex(g, v)];
  }
  out.total = g.num_vertices();
  return out;
}

EdgeCategoryDistribution estimate_edge_category_distribution(
    const PropertyGraph& g, const JointCategoryIndex& index) {
  if (g.num_edges() == 0) throw InputError("cannot estimate P_C on an edgeless graph");
  index.check_conforms(g);
  std::vector<CategoryId> category(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    category[v] = index.category_of_vertex(g, v);
  }
  EdgeCategoryDistribution out;
  for (const Edge& e : g.edges()) {
    ++out.counts[make_pair_key(category[e.u], category[e.v])];
  }
  out.total = g.num_edges();
  return out;
}

double total_variation(const EdgeCategoryDistribution& a,
                       const EdgeCategoryDistribution& b) {
  std::set<CategoryPair> keys;
  for (const auto& [p, n] : a.counts) keys.insert(p);
  for (const auto& [p, n] : b.counts) keys.insert(p);
  double l1 = 0.0;
  for (const auto& p : keys) l1 += std::abs(a.probability(p) - b.probability(p));
  return 0.5 * l1;
}

namespace {

void write_category(std::ostream& out, const JointCategoryIndex& index, CategoryId c) {
  const auto labels = index.labels_of(c);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    out << csv_escape(index.schema()[k].domain[labels[k]]) << ',';
  }
}

void write_header(std::ostream& out, const JointCategoryIndex& index,
                  std::string_view prefix) {
  for (const auto& label : index.schema().labels()) {
    out << prefix << "label_" << csv_escape(label.name) << ',';
  }
}

}  // namespace

void write_distribution_csv(std::ostream& out, const JointCategoryIndex& index,
                            const VertexCategoryDistribution& p_l) {
  write_header(out, index, "");
  out << "probability\n";
  for (const auto& [c, n] : p_l.counts) {
    write_category(out, index, c);
    out << format_double(p_l.probability(c)) << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const JointCategoryIndex& index,
                            const EdgeCategoryDistribution& p_c) {
  write_header(out, index, "a_");
  write_header(out, index, "b_");
  out << "probability\n";
  for (const auto& [p, n] : p_c.counts) {
    write_category(out, index, p.first);
    write_category(out, index, p.second);
    out << format_double(p_c.probability(p)) << '\n';
  }
}

}  // namespace surrograph
