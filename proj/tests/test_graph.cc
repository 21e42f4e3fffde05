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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "helpers.h"
#include "surrograph/error.h"
#include "surrograph/graph.h"
#include "surrograph/synthetic.h"

using namespace surrograph;
using surrograph::test::labeled;

TEST_CASE("degree sequence of an edgeless graph") {
  const PropertyGraph g = labeled(3, {}, {0, 0, 0});
  CHECK(degree_sequence(g).values == std::vector<std::size_t>{0, 0, 0});
  CHECK(degree_sequence(g).sum() == 0);
}

TEST_CASE("degree sequence of a path") {
  const PropertyGraph g = labeled(3, {{0, 1}, {1, 2}}, {0, 0, 0});
  CHECK(degree_sequence(g).values == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("karate has 34 vertices, 78 edges, degree sum 156") {
  const PropertyGraph g = karate_graph();
  CHECK(g.num_vertices() == 34);
  CHECK(g.num_edges() == 78);
  const DegreeSequence d = degree_sequence(g);
  CHECK(d.sum() == 156);
  CHECK(d.values[0] == 16);
  CHECK(d.values[33] == 17);
  CHECK(d.values[32] == 12);
  CHECK(d.min() == 1);
}

TEST_CASE("construction rejects non-simple input") {
  CHECK_THROWS_AS(labeled(2, {{0, 0}}, {0, 0}), InputError);
  CHECK_THROWS_AS(labeled(2, {{0, 1}, {1, 0}}, {0, 0}), InputError);
  CHECK_THROWS_AS(labeled(2, {{0, 2}}, {0, 0}), InputError);
  CHECK_THROWS_AS(labeled(2, {}, {0, 5}), InputError);
  CHECK_THROWS_AS(LabelSchema({Label{"x", {"a"}}, Label{"x", {"b"}}}), InputError);
}

TEST_CASE("adjacency queries") {
  const PropertyGraph g = labeled(4, {{2, 0}, {0, 1}, {1, 2}}, {0, 0, 0, 0});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.degree(3) == 0);
  const auto n = g.neighbors(0);
  CHECK(std::vector<VertexId>(n.begin(), n.end()) == std::vector<VertexId>{1, 2});
  // Edges come back sorted with u < v.
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 2});
}

TEST_CASE("anonymous ids render as n<index>") {
  const PropertyGraph g = labeled(2, {{0, 1}}, {0, 1});
  CHECK(g.anonymous());
  CHECK(g.node_id(1) == "n1");
  const PropertyGraph named(2, {{0, 1}}, test::binary_schema(), {0, 1}, {"alice", "bob"});
  CHECK(named.node_id(0) == "alice");
  CHECK(named.anonymized().node_id(0) == "n0");
}

TEST_CASE("label edits leave topology and other labels alone") {
  const PropertyGraph g = labeled(3, {{0, 1}}, {0, 1, 1});
  const PropertyGraph h = g.with_label(Label{"y", {"p", "q"}}, {1, 0, 1});
  REQUIRE(h.schema().size() == 2);
  CHECK(h.label(0, 0) == 0);
  CHECK(h.label(0, 1) == 1);
  CHECK(h.label_string(2, 1) == "q");
  CHECK(h.num_edges() == 1);
  const std::vector<std::string> drop{"y"};
  CHECK(h.without_labels(drop).schema() == g.schema());
  CHECK_THROWS_AS(g.with_label(Label{"y", {"p"}}, {0, 0}), InputError);
  CHECK_THROWS_AS(g.with_label(Label{"x", {"p"}}, {0, 0, 0}), InputError);
}

TEST_CASE("ego union, radius 0 keeps the seeds only") {
  const PropertyGraph g = labeled(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}}, {0, 0, 1, 1});
  const std::vector<VertexId> seeds{1, 2};
  const Subgraph s = ego_union_subgraph(g, seeds, 0);
  CHECK(s.graph.num_vertices() == 2);
  CHECK(s.graph.num_edges() == 1);
  CHECK(s.original_ids == std::vector<VertexId>{1, 2});
}

TEST_CASE("ego union, triangle plus pendant") {
  // Triangle {a,b,c} = {0,1,2}, pendant d = 3 attached to a.
  const PropertyGraph g = labeled(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}}, {0, 0, 1, 1});
  const std::vector<VertexId> seeds{3};
  const Subgraph s = ego_union_subgraph(g, seeds, 1);
  CHECK(s.original_ids == std::vector<VertexId>{0, 3});
  CHECK(s.graph.num_edges() == 1);
  CHECK(s.graph.has_edge(0, 1));
  CHECK(s.graph.label(0, 0) == 0);
  CHECK(s.graph.label(1, 0) == 1);
}

TEST_CASE("ego union rejects unknown seeds") {
  const PropertyGraph g = labeled(2, {{0, 1}}, {0, 0});
  const std::vector<VertexId> seeds{7};
  CHECK_THROWS_AS(ego_union_subgraph(g, seeds, 1), InputError);
}

TEST_CASE("ego union properties on random graphs") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const PropertyGraph g = random_labeled_graph({.max_vertices = 20, .max_edges = 30}, rng);
    CHECK(degree_sequence(g).sum() == 2 * g.num_edges());

    std::vector<VertexId> all(g.num_vertices());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    const Subgraph whole = ego_union_subgraph(g, all, rng.uniform(3));
    CHECK(whole.graph.num_vertices() == g.num_vertices());
    CHECK(std::equal(whole.graph.edges().begin(), whole.graph.edges().end(),
                     g.edges().begin(), g.edges().end()));

    const std::vector<VertexId> seed{static_cast<VertexId>(rng.uniform(g.num_vertices()))};
    std::vector<VertexId> previous;
    for (std::size_t r = 0; r < 5; ++r) {
      const Subgraph s = ego_union_subgraph(g, seed, r);
      CHECK(std::includes(s.original_ids.begin(), s.original_ids.end(), previous.begin(),
                          previous.end()));
      previous = s.original_ids;
    }
  }
}

TEST_CASE("bfs distances") {
  const PropertyGraph g = labeled(4, {{0, 1}, {1, 2}}, {0, 0, 0, 0});
  const auto d = bfs_distances(g, 0);
  CHECK(d[0] == 0);
  CHECK(d[2] == 2);
  CHECK(d[3] == SIZE_MAX);
}
