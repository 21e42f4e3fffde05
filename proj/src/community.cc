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

#include "surrograph/community.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <ostream>
#include <queue>

#include "surrograph/error.h"
#include "surrograph/format.h"

namespace surrograph {

CommunityAssignment::CommunityAssignment(const std::vector<std::uint32_t>& membership) {
  std::map<std::uint32_t, std::uint32_t> renumber;
  membership_.reserve(membership.size());
  for (std::uint32_t c : membership) {
    auto [it, inserted] = renumber.try_emplace(c, static_cast<std::uint32_t>(renumber.size()));
    membership_.push_back(it->second);
  }
  count_ = static_cast<std::uint32_t>(renumber.size());
}

std::vector<std::size_t> CommunityAssignment::sizes() const {
  std::vector<std::size_t> out(count_, 0);
  for (std::uint32_t c : membership_) ++out[c];
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

CommunityAlgorithm parse_community_algorithm(std::string_view name) {
  if (name == "none") return CommunityAlgorithm::kNone;
  if (name == "edge-betweenness") return CommunityAlgorithm::kEdgeBetweenness;
  if (name == "fast-greedy") return CommunityAlgorithm::kFastGreedy;
  throw InputError("unknown community algorithm '" + std::string(name) +
                   "' (expected edge-betweenness, fast-greedy or none)");
}

std::string_view to_string(CommunityAlgorithm algorithm) {
  switch (algorithm) {
    case CommunityAlgorithm::kNone:
      return "none";
    case CommunityAlgorithm::kEdgeBetweenness:
      return "edge-betweenness";
    case CommunityAlgorithm::kFastGreedy:
      return "fast-greedy";
  }
  return "none";
}

double modularity(const PropertyGraph& g, const CommunityAssignment& assignment) {
  if (g.num_edges() == 0) throw InputError("modularity is undefined without edges");
  if (assignment.num_vertices() != g.num_vertices()) {
    throw InputError("community assignment does not cover the graph");
  }
  std::vector<double> intra(assignment.count(), 0.0);
  std::vector<double> degree(assignment.count(), 0.0);
  for (const Edge& e : g.edges()) {
    const auto cu = assignment.community_of(e.u);
    const auto cv = assignment.community_of(e.v);
    if (cu == cv) intra[cu] += 1.0;
    degree[cu] += 1.0;
    degree[cv] += 1.0;
  }
  const double m = static_cast<double>(g.num_edges());
  double q = 0.0;
  for (std::uint32_t c = 0; c < assignment.count(); ++c) {
    const double share = degree[c] / (2.0 * m);
    q += intra[c] / m - share * share;
  }
  return q;
}

namespace {

struct Incidence {
  std::vector<std::size_t> offsets;
  std::vector<std::pair<VertexId, std::size_t>> entries;  // (neighbor, edge index)
};

Incidence build_incidence(const PropertyGraph& g) {
  Incidence inc;
  const std::size_t n = g.num_vertices();
  inc.offsets.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) inc.offsets[v + 1] = inc.offsets[v] + g.degree(v);
  inc.entries.resize(inc.offsets.back());
  std::vector<std::size_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inc.entries[fill[edges[i].u]++] = {edges[i].v, i};
    inc.entries[fill[edges[i].v]++] = {edges[i].u, i};
  }
  return inc;
}

std::vector<double> betweenness(const PropertyGraph& g, const Incidence& inc,
                                const std::vector<bool>& removed) {
  const std::size_t n = g.num_vertices();
  std::vector<double> score(g.num_edges(), 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<VertexId> order;
  order.reserve(n);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t i = inc.offsets[v]; i < inc.offsets[v + 1]; ++i) {
        const auto [w, e] = inc.entries[i];
        if (removed[e]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      const VertexId w = order[k];
      for (std::size_t i = inc.offsets[w]; i < inc.offsets[w + 1]; ++i) {
        const auto [v, e] = inc.entries[i];
        if (removed[e] || dist[v] != dist[w] - 1) continue;
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        score[e] += c;
        delta[v] += c;
      }
    }
  }
  for (double& x : score) x *= 0.5;
  return score;
}

std::vector<std::uint32_t> components(const PropertyGraph& g, const Incidence& inc,
                                      const std::vector<bool>& removed,
                                      std::uint32_t* count) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.num_vertices(), kUnset);
  std::uint32_t next = 0;
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (std::size_t i = inc.offsets[v]; i < inc.offsets[v + 1]; ++i) {
        const auto [w, e] = inc.entries[i];
        if (!removed[e] && label[w] == kUnset) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  *count = next;
  return label;
}

}  // namespace

std::vector<double> edge_betweenness(const PropertyGraph& g,
                                     const std::vector<bool>& removed) {
  if (removed.size() != g.num_edges()) throw InputError("edge mask has wrong size");
  return betweenness(g, build_incidence(g), removed);
}

CommunityAssignment edge_betweenness_communities(const PropertyGraph& g) {
  if (g.num_vertices() == 0) throw InputError("community detection on an empty graph");
  const Incidence inc = build_incidence(g);
  std::vector<bool> removed(g.num_edges(), false);
  std::uint32_t count = 0;
  CommunityAssignment best(components(g, inc, removed, &count));
  if (g.num_edges() == 0) return best;
  double best_q = modularity(g, best);
  std::uint32_t current = count;

  for (std::size_t remaining = g.num_edges(); remaining > 0; --remaining) {
    const std::vector<double> score = betweenness(g, inc, removed);
    std::size_t pick = score.size();
    double top = -1.0;
    for (std::size_t e = 0; e < score.size(); ++e) {
      if (removed[e]) continue;
      // Relative slack so that float noise cannot reorder exact ties.
      if (pick == score.size() || score[e] > top * (1.0 + 1e-10) + 1e-12) {
        pick = e;
        top = score[e];
      }
    }
    removed[pick] = true;
    auto membership = components(g, inc, removed, &count);
    if (count > current) {
      current = count;
      CommunityAssignment split(membership);
      const double q = modularity(g, split);
      if (q > best_q + 1e-12) {
        best_q = q;
        best = std::move(split);
      }
    }
  }
  return best;
}

CommunityAssignment greedy_modularity_communities(const PropertyGraph& g) {
  if (g.num_edges() == 0) throw InputError("community detection on an edgeless graph");
  const std::size_t n = g.num_vertices();
  const auto two_m = static_cast<std::int64_t>(2 * g.num_edges());

  std::vector<std::int64_t> total_degree(n);
  std::vector<std::map<std::uint32_t, std::int64_t>> links(n);
  for (VertexId v = 0; v < n; ++v) total_degree[v] = static_cast<std::int64_t>(g.degree(v));
  for (const Edge& e : g.edges()) {
    links[e.u][e.v] += 1;
    links[e.v][e.u] += 1;
  }

  // Gain of merging a and b, scaled by 2m^2 to stay integral.
  auto gain = [&](std::uint32_t a, std::uint32_t b) {
    return two_m * links[a].at(b) - total_degree[a] * total_degree[b];
  };

  struct Candidate {
    std::int64_t gain;
    std::uint32_t a, b;
    std::uint64_t version_a, version_b;
  };
  auto worse = [](const Candidate& x, const Candidate& y) {
    if (x.gain != y.gain) return x.gain < y.gain;
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(worse)> heap(worse);
  std::vector<std::uint64_t> version(n, 0);
  std::vector<bool> alive(n, true);
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t v = 0; v < n; ++v) parent[v] = v;

  for (const Edge& e : g.edges()) {
    heap.push({gain(e.u, e.v), e.u, e.v, 0, 0});
  }

  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (!alive[top.a] || !alive[top.b] || version[top.a] != top.version_a ||
        version[top.b] != top.version_b) {
      continue;
    }
    if (top.gain <= 0) break;

    const std::uint32_t a = top.a;
    const std::uint32_t b = top.b;
    total_degree[a] += total_degree[b];
    links[a].erase(b);
    for (const auto& [c, l] : links[b]) {
      if (c == a) continue;
      links[a][c] += l;
      links[c].erase(b);
      links[c][a] += l;
    }
    links[b].clear();
    alive[b] = false;
    parent[b] = a;
    ++version[a];
    for (const auto& [c, l] : links[a]) {
      const std::uint32_t lo = std::min(a, c);
      const std::uint32_t hi = std::max(a, c);
      heap.push({gain(lo, hi), lo, hi, version[lo], version[hi]});
    }
  }

  std::vector<std::uint32_t> membership(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t r = v;
    while (parent[r] != r) r = parent[r];
    membership[v] = r;
  }
  return CommunityAssignment(membership);
}

CommunityAssignment detect_communities(const PropertyGraph& g,
                                       CommunityAlgorithm algorithm) {
  switch (algorithm) {
    case CommunityAlgorithm::kEdgeBetweenness:
      return edge_betweenness_communities(g);
    case CommunityAlgorithm::kFastGreedy:
      return greedy_modularity_communities(g);
    case CommunityAlgorithm::kNone:
      break;
  }
  return CommunityAssignment(std::vector<std::uint32_t>(g.num_vertices(), 0));
}

std::vector<double> linchpin_centrality(const PropertyGraph& g,
                                        std::string_view attribute) {
  const auto k = g.schema().index_of(attribute);
  if (!k) throw InputError("unknown attribute '" + std::string(attribute) + "'");
  const std::size_t n = g.num_vertices();

  // Per vertex: sorted (value, count) over its neighbors' attribute values.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> tally(n);
  for (VertexId u = 0; u < n; ++u) {
    std::vector<std::uint32_t> values;
    for (VertexId w : g.neighbors(u)) values.push_back(g.label(w, *k));
    std::sort(values.begin(), values.end());
    for (std::uint32_t x : values) {
      if (!tally[u].empty() && tally[u].back().first == x) {
        ++tally[u].back().second;
      } else {
        tally[u].push_back({x, 1});
      }
    }
  }

  std::vector<double> score(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    const std::uint32_t mine = g.label(v, *k);
    std::size_t sole = 0;
    for (VertexId u : g.neighbors(v)) {
      const auto& t = tally[u];
      auto it = std::lower_bound(t.begin(), t.end(), std::make_pair(mine, 0u));
      // v itself is one of u's neighbors with this value.
      if (it != t.end() && it->first == mine && it->second == 1) ++sole;
    }
    score[v] = static_cast<double>(sole) / static_cast<double>(g.degree(v));
  }
  return score;
}

void write_communities_csv(std::ostream& out, const PropertyGraph& g,
                           const CommunityAssignment& assignment) {
  out << "node_id,community\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << csv_escape(g.node_id(v)) << ',' << assignment.community_of(v) << '\n';
  }
}

}  // namespace surrograph
