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

#ifndef SURROGRAPH_METRICS_H_
#define SURROGRAPH_METRICS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surrograph/community.h"
#include "surrograph/graph.h"

namespace surrograph {

// P(deg >= d) for d = 0..max degree.
struct Ccdf {
  std::vector<double> values;

  std::size_t max_degree() const { return values.empty() ? 0 : values.size() - 1; }
  // Zero beyond the grid.
  double at(std::size_t d) const { return d < values.size() ? values[d] : 0.0; }
};

// Throws InputError on a vertexless graph.
Ccdf degree_ccdf(const PropertyGraph& g);

// RMSE over the union grid 0..max(D_s, D_t), divided by the range of the
// source CCDF on that grid. Identical CCDFs give 0; otherwise a zero range
// throws InputError.
double nrmse(const Ccdf& source, const Ccdf& target);

// Convenience: nrmse(degree_ccdf(source), degree_ccdf(target)).
double degree_nrmse(const PropertyGraph& source, const PropertyGraph& target);

struct CommunityConcordance {
  std::uint64_t count_difference = 0;  // |K_source - K_target|
  std::uint64_t size_l1 = 0;           // L1 of zero-padded descending sizes

  friend bool operator==(const CommunityConcordance&,
                         const CommunityConcordance&) = default;
};

CommunityConcordance compare_communities(std::span<const std::size_t> source_sizes,
                                         std::span<const std::size_t> target_sizes);
CommunityConcordance compare_communities(const CommunityAssignment& source,
                                         const CommunityAssignment& target);

// Per-vertex regression sample: outcome y = attribute value in `targets`,
// predictor x = fraction of neighbors sharing the vertex's value. Isolated
// vertices are excluded (their proportion is 0/0).
struct HomophilySample {
  std::vector<VertexId> vertices;
  std::vector<double> proportion;
  std::vector<int> outcome;
  std::size_t isolated_excluded = 0;
};

HomophilySample homophily_proportion(const PropertyGraph& g, std::string_view attribute,
                                     std::span<const std::string> targets);

struct RegressionResult {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_se = 0.0;
  double slope_se = 0.0;
  double odds_ratio = 1.0;
  double ci_low = 1.0;
  double ci_high = 1.0;
  bool converged = false;
  int iterations = 0;
  std::string diagnostic;
};

// Log-likelihood of logit P(y=1) = b0 + b1 x, and its gradient.
double logistic_log_likelihood(std::span<const int> y, std::span<const double> x,
                               double b0, double b1);
std::array<double, 2> logistic_gradient(std::span<const int> y,
                                        std::span<const double> x, double b0,
                                        double b1);

// Newton-Raphson (IRLS) fit to max-norm gradient 1e-8 within 50 iterations.
// Standard errors from the inverse observed information; Wald 95% CI on the
// odds ratio. Separable data returns converged = false with a diagnostic.
// Throws InputError on fewer than 2 observations or constant x.
RegressionResult fit_homophily_regression(std::span<const int> y,
                                          std::span<const double> x);

struct HomophilyModel {
  std::string attribute;
  std::vector<std::string> targets;
};

RegressionResult fit_homophily(const PropertyGraph& g, const HomophilyModel& model);

using SurrogatePipeline =
    std::function<PropertyGraph(const PropertyGraph& source, std::uint64_t seed)>;

struct ReplicationResult {
  std::vector<std::uint64_t> seeds;
  std::vector<RegressionResult> fits;
  std::vector<bool> excluded;
  double mean_odds_ratio = 0.0;
  double sd_odds_ratio = 0.0;
  std::size_t used = 0;
  bool any_excluded = false;
};

// Runs `pipeline` with seeds base_seed..base_seed+n-1 (up to `jobs` at a
// time) and summarizes the odds ratios of the converged fits. The sd is the
// sample (n-1) standard deviation. Throws InputError when n < 2.
ReplicationResult replicate_regression(const PropertyGraph& source,
                                       const SurrogatePipeline& pipeline,
                                       const HomophilyModel& model,
                                       std::size_t n_replicates,
                                       std::uint64_t base_seed, unsigned jobs = 1);

struct FidelityReport {
  Ccdf source_ccdf;
  Ccdf generated_ccdf;
  double nrmse = 0.0;
  std::optional<std::vector<std::size_t>> source_community_sizes;
  std::optional<std::vector<std::size_t>> generated_community_sizes;
  std::optional<CommunityConcordance> concordance;
  std::optional<RegressionResult> source_regression;
  std::optional<RegressionResult> generated_regression;
};

// Fills CCDFs, NRMSE and, unless algorithm is kNone, community profiles of
// both graphs.
FidelityReport compute_fidelity(const PropertyGraph& source,
                                const PropertyGraph& generated,
                                CommunityAlgorithm algorithm);

void write_fidelity_jsonl(std::ostream& out, const FidelityReport& report);
void write_fidelity_csv(std::ostream& out, const FidelityReport& report);
// Plot-ready `d,ccdf_source,ccdf_generated` over the union grid.
void write_ccdf_csv(std::ostream& out, const FidelityReport& report);

}  // namespace surrograph

#endif  // SURROGRAPH_METRICS_H_
