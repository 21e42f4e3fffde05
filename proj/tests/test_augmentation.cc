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

#include <limits>
#include <sstream>

#include "helpers.h"
#include "surrograph/augmentation.h"
#include "surrograph/error.h"
#include "surrograph/label_model.h"
#include "surrograph/synthetic.h"

using namespace surrograph;
using surrograph::test::labeled;

namespace {

// Path-like graph whose degrees are exactly 1..10 is awkward to build; use a
// bare degree check instead.
std::uint32_t bin(std::size_t d) { return degree_bin(d, 1, 10, 2); }

}  // namespace

TEST_CASE("equal-width degree bins, hand example") {
  for (std::size_t d = 1; d <= 5; ++d) CHECK(bin(d) == 1);
  for (std::size_t d = 6; d <= 10; ++d) CHECK(bin(d) == 2);
  CHECK(degree_bin(7, 7, 7, 5) == 1);
  // Top edge falls in the last bin.
  CHECK(degree_bin(10, 0, 10, 3) == 3);
}

TEST_CASE("degree-bin label matches the real-valued bin definition") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const PropertyGraph g = random_labeled_graph({.max_vertices = 30, .max_edges = 80}, rng);
    const auto n_b = static_cast<std::uint32_t>(1 + rng.uniform(15));
    const PropertyGraph h = append_degree_bin_label(g, n_b);
    const auto k = *h.schema().index_of(kDegreeBinLabel);
    CHECK(h.schema()[k].domain.size() == n_b);
    const DegreeSequence d = degree_sequence(g);
    const BinSpec spec = BinSpec::equal_width(static_cast<double>(d.min()),
                                              static_cast<double>(d.max()), n_b);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const double x = static_cast<double>(d.values[v]);
      const std::uint32_t b = h.label(v, k) + 1;
      if (d.min() == d.max()) {
        CHECK(b == 1);
        continue;
      }
      // Bin b covers [cuts[b-1], cuts[b]), the last one closed.
      CHECK(x >= spec.cuts[b - 1] - 1e-9);
      if (b < n_b) CHECK(x < spec.cuts[b] + 1e-9);
    }
    // Projection onto the original labels is unchanged.
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (std::size_t j = 0; j < g.schema().size(); ++j) CHECK(h.label(v, j) == g.label(v, j));
    }
  }
}

TEST_CASE("augmented P_L marginalizes to the original") {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const PropertyGraph g = random_labeled_graph({.max_vertices = 30, .max_edges = 60}, rng);
    const PropertyGraph h = append_degree_bin_label(g, 4);
    const JointCategoryIndex gi(g.schema());
    const JointCategoryIndex hi(h.schema());
    std::map<CategoryId, std::uint64_t> marginal;
    for (const auto& [c, n] : estimate_vertex_category_distribution(h, hi).counts) {
      auto lv = hi.labels_of(c);
      lv.pop_back();
      marginal[gi.category_of(lv)] += n;
    }
    CHECK(marginal == estimate_vertex_category_distribution(g, gi).counts);
  }
}

TEST_CASE("n_b = 1 generation equals unaugmented generation") {
  const PropertyGraph g = karate_with_synthetic_labels(2);
  const GenerationConfig config{.n_vertices = 34, .n_edges = 78, .seed = 5};
  const auto plain = generate_like(g, config).graph;
  const auto one = generate_like(append_degree_bin_label(g, 1), config).graph;
  CHECK(std::equal(plain.edges().begin(), plain.edges().end(), one.edges().begin(),
                   one.edges().end()));
}

TEST_CASE("community label") {
  const PropertyGraph g = test::two_triangles_bridge();
  const PropertyGraph h = append_community_label(g, CommunityAssignment({0, 0, 0, 1, 1, 1}));
  const auto k = *h.schema().index_of(kCommunityLabel);
  CHECK(h.schema()[k].domain == std::vector<std::string>{"0", "1"});
  CHECK(h.label(4, k) == 1);
  CHECK_THROWS_AS(append_community_label(g, CommunityAssignment({0, 1})), InputError);
  const PropertyGraph single = append_community_label(g, CommunityAssignment({0, 0, 0, 0, 0, 0}));
  CHECK(single.schema()[*single.schema().index_of(kCommunityLabel)].domain.size() == 1);
}

TEST_CASE("centrality bins") {
  const CentralityBins bins;
  CHECK(bins.names() == std::vector<std::string>{"none", "low", "high"});
  CHECK(bins.bin_of(0.0) == 0);
  CHECK(bins.bin_of(0.1) == 1);
  CHECK(bins.bin_of(0.2) == 2);
  CHECK(bins.bin_of(0.5) == 2);
  CHECK(bins.bin_of(1.0) == 2);
  const PropertyGraph g = labeled(3, {{0, 1}}, {0, 0, 1});
  const std::vector<double> scores{0.0, 0.1, 0.5};
  const PropertyGraph h = append_centrality_bin_label(g, scores);
  const auto k = *h.schema().index_of(kCentralityLabel);
  CHECK(h.label_string(0, k) == "none");
  CHECK(h.label_string(1, k) == "low");
  CHECK(h.label_string(2, k) == "high");
  const std::vector<double> zeros{0.0, 0.0, 0.0};
  const PropertyGraph z = append_centrality_bin_label(g, zeros);
  for (VertexId v = 0; v < 3; ++v) CHECK(z.label_string(v, k) == "none");
  const std::vector<double> bad{0.0, 1.5, 0.0};
  CHECK_THROWS_AS(append_centrality_bin_label(g, bad), InputError);
  CHECK_THROWS_AS(append_centrality_bin_label(g, scores, CentralityBins{{0.5, 0.2}}), InputError);
}

TEST_CASE("tuning with an infinite tolerance picks the first grid value") {
  const PropertyGraph g = karate_with_synthetic_labels(1);
  TuneOptions options;
  options.tolerance = std::numeric_limits<double>::infinity();
  options.mode = TuneMode::kFirstMeeting;
  options.generation.seed = 3;
  const TuneResult r = tune_degree_bins(g, options);
  CHECK(r.selected_bins == 3);
  CHECK(r.evaluations.size() == 1);
  CHECK(r.converged);
}

TEST_CASE("minimize mode evaluates the whole grid and picks the minimum") {
  const PropertyGraph g = karate_with_synthetic_labels(1);
  TuneOptions options;
  options.seeds_per_eval = 3;
  options.generation.seed = 10;
  const TuneResult r = tune_degree_bins(g, options);
  CHECK(r.evaluations.size() == 15);
  REQUIRE(r.mean_error.size() == 5);
  for (const auto& [n_b, e] : r.mean_error) {
    CHECK(r.achieved_error <= e);
    if (e == r.achieved_error) CHECK(r.selected_bins <= n_b);
  }
  // Each evaluation is reproducible through evaluate_generation.
  std::vector<double> errors;
  const double mean = evaluate_generation(
      g, append_degree_bin_label(g, r.selected_bins), resolve_generation(g, options.generation),
      3, {}, &errors);
  CHECK(mean == r.achieved_error);
  CHECK(errors.size() == 3);
}

TEST_CASE("unmet tolerance is reported as not converged") {
  const PropertyGraph g = karate_with_synthetic_labels(1);
  TuneOptions options;
  options.tolerance = -1.0;
  options.mode = TuneMode::kFirstMeeting;
  const TuneResult r = tune_degree_bins(g, options);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations.size() == 5);
}

TEST_CASE("tuning is independent of the job count") {
  const PropertyGraph g = karate_with_synthetic_labels(6);
  TuneOptions options;
  options.seeds_per_eval = 2;
  const TuneResult a = tune_degree_bins(g, options);
  options.jobs = 4;
  const TuneResult b = tune_degree_bins(g, options);
  std::ostringstream x, y;
  write_tune_csv(x, a);
  write_tune_csv(y, b);
  CHECK(x.str() == y.str());
}

TEST_CASE("tuning input errors") {
  const PropertyGraph g = karate_with_synthetic_labels(1);
  TuneOptions options;
  options.grid.clear();
  CHECK_THROWS_AS(tune_degree_bins(g, options), InputError);
  options.grid = {0};
  CHECK_THROWS_AS(tune_degree_bins(g, options), InputError);
  options.grid = {3};
  options.seeds_per_eval = 0;
  CHECK_THROWS_AS(tune_degree_bins(g, options), InputError);
}

TEST_CASE("tune CSV layout") {
  TuneResult r;
  r.evaluations = {{3, 1, 0.5}, {5, 1, 0.25}};
  r.selected_bins = 5;
  r.achieved_error = 0.25;
  r.converged = true;
  std::ostringstream out;
  write_tune_csv(out, r);
  CHECK(out.str() == "n_b,seed,nrmse\n3,1,0.5\n5,1,0.25\nselected,5,0.25\nconverged,1,none\n");
}
