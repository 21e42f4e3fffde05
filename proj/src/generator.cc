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

#include "surrograph/generator.h"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "json.hpp"
#include "surrograph/error.h"

namespace surrograph {

void GenerationConfig::validate() const {
  if (n_vertices < 1) throw InputError("n_vertices must be at least 1");
  if (retry_budget < 1) throw InputError("retry budget must be at least 1");
  if (n_vertices > 0xffffffffULL) throw InputError("n_vertices too large");
}

namespace {

// Draws `draws` keys i.i.d. proportional to integer weights. Every key with
// positive weight appears in the result, possibly with count 0.
template <typename Key>
std::map<Key, std::uint64_t> multinomial(const std::map<Key, std::uint64_t>& weights,
                                         std::uint64_t draws, Rng& rng) {
  std::vector<Key> keys;
  std::vector<std::uint64_t> cumulative;
  std::uint64_t total = 0;
  std::map<Key, std::uint64_t> out;
  for (const auto& [k, w] : weights) {
    if (w == 0) continue;
    total += w;
    keys.push_back(k);
    cumulative.push_back(total);
    out[k] = 0;
  }
  if (total == 0) return out;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const std::uint64_t r = rng.uniform(total);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    ++out[keys[static_cast<std::size_t>(it - cumulative.begin())]];
  }
  return out;
}

}  // namespace

CategoryCounts allocate_vertices(const VertexCategoryDistribution& p_l,
                                 std::uint64_t n_vertices, AllocationMode mode,
                                 Rng& rng) {
  CategoryCounts counts = mode == AllocationMode::kDeterministic
                              ? largest_remainder(p_l.counts, n_vertices)
                              : multinomial(p_l.counts, n_vertices, rng);
  for (const auto& [c, w] : p_l.counts) counts.try_emplace(c, 0);
  return counts;
}

CategoryToVertexMap::CategoryToVertexMap(const CategoryCounts& counts) {
  VertexId next = 0;
  for (const auto& [c, n] : counts) {
    auto& list = lists_[c];
    list.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) list.push_back(next++);
  }
  num_vertices_ = next;
}

std::span<const VertexId> CategoryToVertexMap::vertices(CategoryId c) const {
  auto it = lists_.find(c);
  if (it == lists_.end()) return {};
  return it->second;
}

CategoryToVertexMap build_category_to_vertex_map(const CategoryCounts& counts) {
  return CategoryToVertexMap(counts);
}

EdgeSample sample_edges(const EdgeCategoryDistribution& p_c,
                        const CategoryToVertexMap& c2v, std::uint64_t n_edges,
                        std::uint32_t retry_budget, AllocationMode mode, Rng& rng) {
  if (retry_budget < 1) throw InputError("retry budget must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const auto slots = mode == AllocationMode::kDeterministic
                         ? largest_remainder(p_c.counts, n_edges)
                         : multinomial(p_c.counts, n_edges, rng);

  EdgeSample out;
  GenerationReport& report = out.report;
  report.edges_requested = n_edges;
  out.edges.reserve(n_edges);
  // Every vertex has exactly one category, so different category pairs never
  // share a vertex pair and duplicates only need checking within one pair.
  std::unordered_set<std::uint64_t> placed;
  if (p_c.total == 0) {
    // Nothing to draw pairs from; every slot is abandoned.
    report.edges_abandoned = n_edges;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return out;
  }

  for (const auto& [pair, count] : slots) {
    const auto first = c2v.vertices(pair.first);
    const auto second = c2v.vertices(pair.second);
    placed.clear();
    placed.reserve(count * 2);
    for (std::uint64_t slot = 0; slot < count; ++slot) {
      bool done = false;
      if (!first.empty() && !second.empty()) {
        for (std::uint32_t attempt = 0; attempt < retry_budget; ++attempt) {
          const VertexId a = first[rng.uniform(first.size())];
          const VertexId b = second[rng.uniform(second.size())];
          if (a != b && placed.insert(edge_key(make_edge(a, b))).second) {
            out.edges.push_back(make_edge(a, b));
            done = true;
            break;
          }
          ++report.retries_total;
        }
      }
      if (done) {
        ++report.edges_placed;
      } else {
        ++report.edges_abandoned;
        ++report.abandoned_by_pair[pair];
      }
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

GeneratedGraph generate_graph(const JointCategoryIndex& index,
                              const VertexCategoryDistribution& p_l,
                              const EdgeCategoryDistribution& p_c,
                              const GenerationConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Rng vertex_rng = Rng::for_stream(config.seed, Stream::kVertexAllocation);
  Rng edge_rng = Rng::for_stream(config.seed, Stream::kEdgeSampling);

  const CategoryCounts counts =
      allocate_vertices(p_l, config.n_vertices, config.vertex_allocation, vertex_rng);
  const CategoryToVertexMap c2v = build_category_to_vertex_map(counts);
  EdgeSample sample = sample_edges(p_c, c2v, config.n_edges, config.retry_budget,
                                   config.edge_allocation, edge_rng);

  const std::size_t m = index.schema().size();
  std::vector<std::uint32_t> labels(c2v.num_vertices() * m);
  for (const auto& [c, list] : c2v.lists()) {
    const auto lv = index.labels_of(c);
    for (VertexId v : list) std::copy(lv.begin(), lv.end(), labels.begin() + v * m);
  }
  GeneratedGraph out{PropertyGraph(c2v.num_vertices(), std::move(sample.edges),
                                   index.schema(), std::move(labels)),
                     std::move(sample.report)};
  out.report.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

GeneratedGraph generate_like(const PropertyGraph& source,
                             const GenerationConfig& config) {
  const JointCategoryIndex index(source.schema());
  const auto p_l = estimate_vertex_category_distribution(source, index);
  EdgeCategoryDistribution p_c;
  if (source.num_edges() > 0) p_c = estimate_edge_category_distribution(source, index);
  return generate_graph(index, p_l, p_c, config);
}

void write_report_csv(std::ostream& out, const GenerationReport& report) {
  out << "key,value\n"
      << "edges_requested," << report.edges_requested << '\n'
      << "edges_placed," << report.edges_placed << '\n'
      << "edges_abandoned," << report.edges_abandoned << '\n'
      << "retries_total," << report.retries_total << '\n';
  for (const auto& [pair, n] : report.abandoned_by_pair) {
    out << "abandoned_pair:" << pair.first << ':' << pair.second << ',' << n << '\n';
  }
}

void write_report_jsonl(std::ostream& out, const GenerationReport& report) {
  nlohmann::ordered_json j;
  j["record"] = "generation";
  j["edges_requested"] = report.edges_requested;
  j["edges_placed"] = report.edges_placed;
  j["edges_abandoned"] = report.edges_abandoned;
  j["retries_total"] = report.retries_total;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [pair, n] : report.abandoned_by_pair) {
    pairs.push_back({pair.first, pair.second, n});
  }
  j["abandoned_by_pair"] = pairs;
  out << j.dump() << '\n';
}

}  // namespace surrograph
