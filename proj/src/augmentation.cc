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

#include "surrograph/augmentation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "surrograph/error.h"
#include "surrograph/format.h"
#include "surrograph/metrics.h"
#include "surrograph/parallel.h"

namespace surrograph {

BinSpec BinSpec::equal_width(double lo, double hi, std::uint32_t n_bins) {
  if (n_bins < 1) throw InputError("bin count must be at least 1");
  if (hi < lo) throw InputError("bin range is inverted");
  BinSpec spec;
  spec.n_bins = n_bins;
  const double width = (hi - lo) / n_bins;
  spec.cuts.resize(n_bins + 1);
  for (std::uint32_t k = 0; k <= n_bins; ++k) spec.cuts[k] = lo + k * width;
  spec.cuts.back() = hi;
  return spec;
}

std::uint32_t degree_bin(std::size_t degree, std::size_t min_degree,
                         std::size_t max_degree, std::uint32_t n_bins) {
  if (max_degree == min_degree) return 1;
  // k = floor((d - min) * n_b / (max - min)) + 1, with the top edge folded
  // into the last bin.
  const auto k = static_cast<std::uint32_t>((degree - min_degree) * n_bins /
                                            (max_degree - min_degree));
  return std::min(k, n_bins - 1) + 1;
}

PropertyGraph append_degree_bin_label(const PropertyGraph& g, std::uint32_t n_bins) {
  if (n_bins < 1) throw InputError("bin count must be at least 1");
  if (g.num_vertices() == 0) throw InputError("degree bins of an empty graph");
  const DegreeSequence degrees = degree_sequence(g);
  const std::size_t lo = degrees.min();
  const std::size_t hi = degrees.max();
  Label label{kDegreeBinLabel, {}};
  for (std::uint32_t k = 1; k <= n_bins; ++k) label.domain.push_back(std::to_string(k));
  std::vector<std::uint32_t> values(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    values[v] = degree_bin(degrees.values[v], lo, hi, n_bins) - 1;
  }
  return g.with_label(std::move(label), std::move(values));
}

PropertyGraph append_community_label(const PropertyGraph& g,
                                     const CommunityAssignment& assignment) {
  if (assignment.num_vertices() != g.num_vertices()) {
    throw InputError("community assignment covers " +
                     std::to_string(assignment.num_vertices()) + " of " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
  Label label{kCommunityLabel, {}};
  for (std::uint32_t c = 0; c < assignment.count(); ++c) {
    label.domain.push_back(std::to_string(c));
  }
  return g.with_label(std::move(label), assignment.membership());
}

std::vector<std::string> CentralityBins::names() const {
  std::vector<std::string> out{"none", "low"};
  for (std::size_t i = 1; i < cuts.size(); ++i) out.push_back("mid" + std::to_string(i));
  if (!cuts.empty()) out.push_back("high");
  return out;
}

std::uint32_t CentralityBins::bin_of(double score) const {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw InputError("centrality score " + format_double(score) + " outside [0, 1]");
  }
  if (score == 0.0) return 0;
  const auto above = std::upper_bound(cuts.begin(), cuts.end(), score) - cuts.begin();
  return static_cast<std::uint32_t>(1 + above);
}

PropertyGraph append_centrality_bin_label(const PropertyGraph& g,
                                          std::span<const double> scores,
                                          const CentralityBins& bins) {
  if (scores.size() != g.num_vertices()) {
    throw InputError("centrality scores must be index-aligned with vertices");
  }
  for (std::size_t i = 0; i < bins.cuts.size(); ++i) {
    if (!(bins.cuts[i] > 0.0 && bins.cuts[i] <= 1.0) ||
        (i > 0 && !(bins.cuts[i] > bins.cuts[i - 1]))) {
      throw InputError("centrality cut points must be ascending in (0, 1]");
    }
  }
  Label label{kCentralityLabel, bins.names()};
  std::vector<std::uint32_t> values(scores.size());
  for (std::size_t v = 0; v < scores.size(); ++v) values[v] = bins.bin_of(scores[v]);
  return g.with_label(std::move(label), std::move(values));
}

GenerationConfig resolve_generation(const PropertyGraph& source, GenerationConfig config) {
  if (config.n_vertices == 0) config.n_vertices = source.num_vertices();
  if (config.n_edges == 0) config.n_edges = source.num_edges();
  return config;
}

double evaluate_generation(const PropertyGraph& reference, const PropertyGraph& labeled,
                           const GenerationConfig& config, std::uint32_t seeds,
                           const GraphErrorMetric& metric, std::vector<double>* errors) {
  const GraphErrorMetric& error = metric ? metric : GraphErrorMetric(degree_nrmse);
  double sum = 0.0;
  for (std::uint32_t j = 0; j < seeds; ++j) {
    GenerationConfig c = config;
    c.seed = config.seed + j;
    const double e = error(reference, generate_like(labeled, c).graph);
    if (errors) errors->push_back(e);
    sum += e;
  }
  return sum / seeds;
}

TuneResult tune_degree_bins(const PropertyGraph& g, const TuneOptions& options) {
  if (options.grid.empty()) throw InputError("degree-bin grid is empty");
  if (options.seeds_per_eval < 1) throw InputError("seeds_per_eval must be at least 1");
  if (g.schema().index_of(kDegreeBinLabel)) {
    throw InputError("graph already carries a degree-bin label");
  }
  for (std::uint32_t n_b : options.grid) {
    if (n_b < 1) throw InputError("degree-bin grid values must be at least 1");
  }
  const GraphErrorMetric metric =
      options.metric ? options.metric : GraphErrorMetric(degree_nrmse);
  const GenerationConfig config = resolve_generation(g, options.generation);

  TuneResult result;
  result.tolerance = options.tolerance;
  result.seeds_per_eval = options.seeds_per_eval;

  // Evaluates a batch of grid positions concurrently.
  auto evaluate = [&](std::span<const std::uint32_t> bins) {
    const std::size_t per = options.seeds_per_eval;
    std::vector<double> errors(bins.size() * per);
    std::vector<PropertyGraph> labeled(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
      labeled[i] = append_degree_bin_label(g, bins[i]);
    }
    parallel_for(errors.size(), options.jobs, [&](std::size_t t) {
      GenerationConfig c = config;
      c.seed = config.seed + t % per;
      errors[t] = metric(g, generate_like(labeled[t / per], c).graph);
    });
    for (std::size_t i = 0; i < bins.size(); ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < per; ++j) {
        const double e = errors[i * per + j];
        result.evaluations.push_back({bins[i], config.seed + j, e});
        sum += e;
      }
      result.mean_error.emplace_back(bins[i], sum / static_cast<double>(per));
    }
  };

  if (options.mode == TuneMode::kMinimize || !options.tolerance) {
    evaluate(options.grid);
  } else {
    for (std::uint32_t n_b : options.grid) {
      evaluate(std::span<const std::uint32_t>(&n_b, 1));
      if (result.mean_error.back().second <= *options.tolerance) break;
    }
  }

  auto best = result.mean_error.begin();
  for (auto it = result.mean_error.begin(); it != result.mean_error.end(); ++it) {
    if (it->second < best->second ||
        (it->second == best->second && it->first < best->first)) {
      best = it;
    }
  }
  result.selected_bins = best->first;
  result.achieved_error = best->second;
  result.converged = !options.tolerance || result.achieved_error <= *options.tolerance;
  return result;
}

void write_tune_csv(std::ostream& out, const TuneResult& result) {
  out << "n_b,seed,nrmse\n";
  for (const auto& e : result.evaluations) {
    out << e.n_bins << ',' << e.seed << ',' << format_double(e.error) << '\n';
  }
  out << "selected," << result.selected_bins << ',' << format_double(result.achieved_error)
      << '\n';
  out << "converged," << (result.converged ? 1 : 0) << ','
      << (result.tolerance ? format_double(*result.tolerance) : std::string("none")) << '\n';
}

}  // namespace surrograph
