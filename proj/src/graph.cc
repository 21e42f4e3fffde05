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

#include "surrograph/graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

#include "surrograph/error.h"

namespace surrograph {

std::optional<std::uint32_t> Label::find_value(std::string_view value) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == value) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

LabelSchema::LabelSchema(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i].name == labels_[j].name) {
        throw InputError("duplicate label name '" + labels_[i].name + "'");
      }
    }
  }
}

std::optional<std::size_t> LabelSchema::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k].name == name) return k;
  }
  return std::nullopt;
}

PropertyGraph::PropertyGraph() {
  Topology empty;
  empty.offsets = {0};
  topology_ = std::make_shared<const Topology>(std::move(empty));
}

PropertyGraph::PropertyGraph(std::size_t num_vertices, std::vector<Edge> edges,
                             LabelSchema schema,
                             std::vector<std::uint32_t> label_values,
                             std::vector<std::string> node_ids,
                             std::vector<PassiveColumn> passive)
    : schema_(std::move(schema)),
      labels_(std::move(label_values)),
      node_ids_(std::move(node_ids)),
      passive_(std::move(passive)) {
  if (num_vertices > std::numeric_limits<VertexId>::max()) {
    throw InputError("too many vertices");
  }
  if (labels_.size() != num_vertices * schema_.size()) {
    throw InputError("label table has " + std::to_string(labels_.size()) +
                     " entries, expected " +
                     std::to_string(num_vertices * schema_.size()));
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    for (std::size_t k = 0; k < schema_.size(); ++k) {
      if (labels_[v * schema_.size() + k] >= schema_[k].domain.size()) {
        throw InputError("vertex " + std::to_string(v) + " has a value outside "
                         "the domain of label '" + schema_[k].name + "'");
      }
    }
  }
  if (!node_ids_.empty() && node_ids_.size() != num_vertices) {
    throw InputError("node id table size does not match vertex count");
  }
  for (const auto& column : passive_) {
    if (column.values.size() != num_vertices) {
      throw InputError("passive column '" + column.name + "' has wrong length");
    }
  }

  // CSR by counting sort, then short per-vertex sorts. Linear in |E| for
  // bounded degree, which the global edge sort was not.
  Topology topo;
  topo.num_vertices = num_vertices;
  std::vector<std::size_t> degree(num_vertices, 0);
  for (Edge& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= num_vertices) {
      throw InputError("edge endpoint " + std::to_string(e.v) + " out of range");
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  topo.offsets.assign(num_vertices + 1, 0);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    topo.offsets[v + 1] = topo.offsets[v] + degree[v];
  }
  topo.adjacency.resize(topo.offsets.back());
  std::vector<std::size_t> fill(topo.offsets.begin(), topo.offsets.end() - 1);
  for (const Edge& e : edges) {
    topo.adjacency[fill[e.u]++] = e.v;
    topo.adjacency[fill[e.v]++] = e.u;
  }
  topo.edges.reserve(edges.size());
  for (VertexId v = 0; v < num_vertices; ++v) {
    const auto first = topo.adjacency.begin() + static_cast<std::ptrdiff_t>(topo.offsets[v]);
    const auto last = topo.adjacency.begin() + static_cast<std::ptrdiff_t>(topo.offsets[v + 1]);
    std::sort(first, last);
    if (const auto dup = std::adjacent_find(first, last); dup != last) {
      const Edge e = make_edge(v, *dup);
      throw InputError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    // Upper neighbors in order give the edge list sorted by (u, v).
    for (auto it = std::upper_bound(first, last, v); it != last; ++it) {
      topo.edges.push_back({v, *it});
    }
  }
  topology_ = std::make_shared<const Topology>(std::move(topo));
}

std::span<const VertexId> PropertyGraph::neighbors(VertexId v) const {
  const auto& t = *topology_;
  return std::span<const VertexId>(t.adjacency).subspan(
      t.offsets[v], t.offsets[v + 1] - t.offsets[v]);
}

std::size_t PropertyGraph::degree(VertexId v) const {
  return topology_->offsets[v + 1] - topology_->offsets[v];
}

bool PropertyGraph::has_edge(VertexId a, VertexId b) const {
  if (a == b || a >= num_vertices() || b >= num_vertices()) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::span<const std::uint32_t> PropertyGraph::label_vector(VertexId v) const {
  return std::span<const std::uint32_t>(labels_).subspan(
      static_cast<std::size_t>(v) * schema_.size(), schema_.size());
}

std::string PropertyGraph::node_id(VertexId v) const {
  if (node_ids_.empty()) return "n" + std::to_string(v);
  return node_ids_[v];
}

PropertyGraph PropertyGraph::with_column_order(std::vector<std::string> order) const {
  PropertyGraph out = *this;
  out.column_order_ = std::move(order);
  return out;
}

PropertyGraph PropertyGraph::with_label(Label label,
                                        std::vector<std::uint32_t> values) const {
  const std::size_t n = num_vertices();
  if (values.size() != n) {
    throw InputError("label '" + label.name + "' needs one value per vertex");
  }
  for (std::uint32_t x : values) {
    if (x >= label.domain.size()) {
      throw InputError("value outside the domain of label '" + label.name + "'");
    }
  }
  std::vector<Label> labels = schema_.labels();
  labels.push_back(std::move(label));
  const std::size_t m_old = schema_.size();
  const std::size_t m_new = m_old + 1;

  PropertyGraph out = *this;
  out.schema_ = LabelSchema(std::move(labels));
  out.labels_.assign(n * m_new, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::copy_n(labels_.begin() + v * m_old, m_old, out.labels_.begin() + v * m_new);
    out.labels_[v * m_new + m_old] = values[v];
  }
  return out;
}

PropertyGraph PropertyGraph::without_labels(std::span<const std::string> names) const {
  std::vector<std::size_t> keep;
  std::vector<Label> labels;
  for (std::size_t k = 0; k < schema_.size(); ++k) {
    if (std::find(names.begin(), names.end(), schema_[k].name) == names.end()) {
      keep.push_back(k);
      labels.push_back(schema_[k]);
    }
  }
  const std::size_t n = num_vertices();
  PropertyGraph out = *this;
  out.schema_ = LabelSchema(std::move(labels));
  out.labels_.assign(n * keep.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
      out.labels_[v * keep.size() + i] = label(static_cast<VertexId>(v), keep[i]);
    }
  }
  return out;
}

PropertyGraph PropertyGraph::anonymized() const {
  PropertyGraph out = *this;
  out.node_ids_.clear();
  out.passive_.clear();
  out.column_order_.clear();
  return out;
}

std::size_t DegreeSequence::sum() const {
  std::size_t s = 0;
  for (std::size_t d : values) s += d;
  return s;
}

std::size_t DegreeSequence::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

std::size_t DegreeSequence::min() const {
  return values.empty() ? 0 : *std::min_element(values.begin(), values.end());
}

DegreeSequence degree_sequence(const PropertyGraph& g) {
  DegreeSequence out;
  out.values.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.values[v] = g.degree(v);
  return out;
}

Subgraph induced_subgraph(const PropertyGraph& g,
                          std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> remap(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.num_vertices()) {
      throw InputError("vertex " + std::to_string(keep[i]) + " out of range");
    }
    remap[keep[i]] = static_cast<VertexId>(i);
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (remap[e.u] != kAbsent && remap[e.v] != kAbsent) {
      edges.push_back({remap[e.u], remap[e.v]});
    }
  }
  const std::size_t m = g.schema().size();
  std::vector<std::uint32_t> labels;
  labels.reserve(keep.size() * m);
  std::vector<std::string> ids;
  for (VertexId v : keep) {
    auto lv = g.label_vector(v);
    labels.insert(labels.end(), lv.begin(), lv.end());
    if (!g.anonymous()) ids.push_back(g.node_ids()[v]);
  }
  std::vector<PassiveColumn> passive;
  for (const auto& column : g.passive_columns()) {
    PassiveColumn c{column.name, {}};
    for (VertexId v : keep) c.values.push_back(column.values[v]);
    passive.push_back(std::move(c));
  }
  PropertyGraph sub(keep.size(), std::move(edges), g.schema(), std::move(labels),
                    std::move(ids), std::move(passive));
  return {sub.with_column_order(g.column_order()), std::move(keep)};
}

std::vector<std::size_t> bfs_distances(const PropertyGraph& g, VertexId source) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.num_vertices(), kInf);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : g.neighbors(v)) {
      if (dist[u] == kInf) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

Subgraph ego_union_subgraph(const PropertyGraph& g,
                            std::span<const VertexId> seeds,
                            std::size_t radius) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.num_vertices(), kInf);
  std::deque<VertexId> queue;
  for (VertexId s : seeds) {
    if (s >= g.num_vertices()) {
      throw InputError("unknown seed vertex " + std::to_string(s));
    }
    if (dist[s] == kInf) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  std::vector<VertexId> reached;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    reached.push_back(v);
    if (dist[v] == radius) continue;
    for (VertexId u : g.neighbors(v)) {
      if (dist[u] == kInf) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return induced_subgraph(g, reached);
}

}  // namespace surrograph
