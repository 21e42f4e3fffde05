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

#ifndef SURROGRAPH_AUGMENTATION_H_
#define SURROGRAPH_AUGMENTATION_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surrograph/community.h"
#include "surrograph/generator.h"
#include "surrograph/graph.h"

namespace surrograph {

// Names of the structural labels appended by this module, in the fixed order
// they enter the schema after the original labels.
inline constexpr const char* kCommunityLabel = "community";
inline constexpr const char* kCentralityLabel = "centbin";
inline constexpr const char* kDegreeBinLabel = "degbin";

// Equal-width partition of [lo, hi] into n_bins intervals; bin k (1-based)
// covers [lo + (k-1)w, lo + k w), the last bin is closed on the right.
struct BinSpec {
  std::uint32_t n_bins = 1;
  std::vector<double> cuts;  // n_bins + 1 ascending points

  static BinSpec equal_width(double lo, double hi, std::uint32_t n_bins);
};

// 1-based bin of a degree. Integer arithmetic, so boundaries are exact.
std::uint32_t degree_bin(std::size_t degree, std::size_t min_degree,
                         std::size_t max_degree, std::uint32_t n_bins);

// Appends `degbin` with domain "1".."n_bins". Throws InputError when
// n_bins < 1 or g is empty.
PropertyGraph append_degree_bin_label(const PropertyGraph& g, std::uint32_t n_bins);

// Appends `community` with domain "0".."K-1". Throws InputError when the
// assignment does not cover g.
PropertyGraph append_community_label(const PropertyGraph& g,
                                     const CommunityAssignment& assignment);

// Bins scores in [0, 1]: exactly 0 is "none"; cut points t_1 < ... < t_k in
// (0, 1] split the rest into half-open [t_i, t_{i+1}) bins. With the default
// single cut 0.2 the domain is {none, low, high}.
struct CentralityBins {
  std::vector<double> cuts{0.2};

  std::vector<std::string> names() const;
  std::uint32_t bin_of(double score) const;
};

PropertyGraph append_centrality_bin_label(const PropertyGraph& g,
                                          std::span<const double> scores,
                                          const CentralityBins& bins = {});

enum class TuneMode {
  // Walk the grid in order and stop at the first n_b meeting the tolerance.
  kFirstMeeting,
  // Evaluate the whole grid and select the minimizer.
  kMinimize,
};

// Error between source and generated graph; default is degree-CCDF NRMSE.
using GraphErrorMetric =
    std::function<double(const PropertyGraph& source, const PropertyGraph& generated)>;

struct TuneOptions {
  std::vector<std::uint32_t> grid{3, 5, 7, 10, 15};
  std::optional<double> tolerance;
  TuneMode mode = TuneMode::kMinimize;
  std::uint32_t seeds_per_eval = 1;
  // n_vertices/n_edges of 0 mean "same as source".
  GenerationConfig generation;
  GraphErrorMetric metric;
  unsigned jobs = 1;
};

struct TuneEvaluation {
  std::uint32_t n_bins = 0;
  std::uint64_t seed = 0;
  double error = 0.0;
};

struct TuneResult {
  std::vector<TuneEvaluation> evaluations;
  std::vector<std::pair<std::uint32_t, double>> mean_error;  // evaluated grid order
  std::uint32_t selected_bins = 0;
  double achieved_error = 0.0;
  std::optional<double> tolerance;
  std::uint32_t seeds_per_eval = 0;
  bool converged = true;
};

// Resolves zero n_vertices / n_edges to the source's size.
GenerationConfig resolve_generation(const PropertyGraph& source, GenerationConfig config);

// Mean error of `seeds` generations from `labeled` (seeds config.seed + j)
// against `reference`. Per-seed errors are appended to `errors` if given.
double evaluate_generation(const PropertyGraph& reference, const PropertyGraph& labeled,
                           const GenerationConfig& config, std::uint32_t seeds,
                           const GraphErrorMetric& metric,
                           std::vector<double>* errors = nullptr);

// Degree-bin tuning. For each grid value, appends degree bins to `g` (which
// already carries any other labels), generates seeds_per_eval graphs with
// seeds generation.seed + j and averages the error against `g`. Selection
// minimizes the mean (ties to the smaller n_b); converged is false when a
// tolerance is set and the selected mean exceeds it.
TuneResult tune_degree_bins(const PropertyGraph& g, const TuneOptions& options);

// `n_b,seed,nrmse` per evaluation, then `selected,<n_b>,<mean>` and
// `converged,<0|1>,<tolerance>` summary rows.
void write_tune_csv(std::ostream& out, const TuneResult& result);

}  // namespace surrograph

#endif  // SURROGRAPH_AUGMENTATION_H_
