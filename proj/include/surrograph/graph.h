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

#ifndef SURROGRAPH_GRAPH_H_
#define SURROGRAPH_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surrograph {

using VertexId = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order. Does not reject self-loops.
inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

// A categorical label with an ordered value domain. The domain order defines
// the category enumeration order downstream.
struct Label {
  std::string name;
  std::vector<std::string> domain;

  std::optional<std::uint32_t> find_value(std::string_view value) const;

  friend bool operator==(const Label&, const Label&) = default;
};

class LabelSchema {
 public:
  LabelSchema() = default;
  // Throws InputError on duplicate label names.
  explicit LabelSchema(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const Label& operator[](std::size_t k) const { return labels_[k]; }
  const std::vector<Label>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const LabelSchema&, const LabelSchema&) = default;

 private:
  std::vector<Label> labels_;
};

// Non-label vertex columns carried through ingest but never generated.
struct PassiveColumn {
  std::string name;
  std::vector<std::string> values;
};

// Undirected simple graph whose vertices carry one value per schema label.
// Immutable after construction; topology is shared between graphs derived by
// label edits, so augmentation is cheap.
class PropertyGraph {
 public:
  PropertyGraph();

  // label_values is row-major |V| x |schema|, each entry an index into the
  // label's domain. node_ids is either empty (anonymous graph, ids rendered
  // as n0..n{|V|-1}) or one id per vertex. Throws InputError on self-loops,
  // duplicate edges, out-of-range endpoints or label values.
  PropertyGraph(std::size_t num_vertices, std::vector<Edge> edges,
                LabelSchema schema, std::vector<std::uint32_t> label_values,
                std::vector<std::string> node_ids = {},
                std::vector<PassiveColumn> passive = {});

  std::size_t num_vertices() const { return topology_->num_vertices; }
  std::size_t num_edges() const { return topology_->edges.size(); }
  // Sorted lexicographically by (u, v).
  std::span<const Edge> edges() const { return topology_->edges; }
  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;

  const LabelSchema& schema() const { return schema_; }
  std::uint32_t label(VertexId v, std::size_t k) const {
    return labels_[static_cast<std::size_t>(v) * schema_.size() + k];
  }
  std::span<const std::uint32_t> label_vector(VertexId v) const;
  const std::string& label_string(VertexId v, std::size_t k) const {
    return schema_[k].domain[label(v, k)];
  }

  bool anonymous() const { return node_ids_.empty(); }
  std::string node_id(VertexId v) const;
  const std::vector<std::string>& node_ids() const { return node_ids_; }
  const std::vector<PassiveColumn>& passive_columns() const { return passive_; }

  // Column order as read from a node table (label columns carry the
  // "label_" prefix). Empty for constructed graphs.
  const std::vector<std::string>& column_order() const { return column_order_; }
  PropertyGraph with_column_order(std::vector<std::string> order) const;

  // Returns a copy with one more label appended to the schema.
  PropertyGraph with_label(Label label, std::vector<std::uint32_t> values) const;
  // Returns a copy without the named labels (unknown names are ignored).
  PropertyGraph without_labels(std::span<const std::string> names) const;
  // Drops node ids and passive columns.
  PropertyGraph anonymized() const;

 private:
  struct Topology {
    std::size_t num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> offsets;
    std::vector<VertexId> adjacency;
  };

  std::shared_ptr<const Topology> topology_;
  LabelSchema schema_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::string> node_ids_;
  std::vector<PassiveColumn> passive_;
  std::vector<std::string> column_order_;
};

struct DegreeSequence {
  std::vector<std::size_t> values;

  std::size_t sum() const;
  std::size_t max() const;
  std::size_t min() const;
};

DegreeSequence degree_sequence(const PropertyGraph& g);

// Induced subgraph on `vertices` (any order, duplicates ignored). The result
// keeps labels, node ids and passive columns; vertices are renumbered in
// ascending original-id order.
struct Subgraph {
  PropertyGraph graph;
  std::vector<VertexId> original_ids;
};

Subgraph induced_subgraph(const PropertyGraph& g,
                          std::span<const VertexId> vertices);

// Induced subgraph on every vertex within `radius` hops of any seed. Seeds
// themselves are included (radius 0). Throws InputError on unknown seeds.
Subgraph ego_union_subgraph(const PropertyGraph& g,
                            std::span<const VertexId> seeds,
                            std::size_t radius);

// Hop distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const PropertyGraph& g, VertexId source);

}  // namespace surrograph

#endif  // SURROGRAPH_GRAPH_H_
