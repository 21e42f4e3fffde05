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

#include "surrograph/pipeline.h"

#include <algorithm>
#include <utility>

#include "surrograph/error.h"
#include "surrograph/format.h"
#include "surrograph/parallel.h"

namespace surrograph {

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw InputError(std::string("stage ") + name + ": " + e.what());
  }
}

}  // namespace

void PipelineSpec::validate(const PropertyGraph& source) const {
  if (source.num_vertices() == 0) throw InputError("source graph is empty");
  for (const char* name : {kCommunityLabel, kCentralityLabel, kDegreeBinLabel}) {
    if (source.schema().index_of(name)) {
      throw InputError(std::string("source already has a label named '") + name + "'");
    }
  }
  for (std::uint32_t n_b : degree_grid) {
    if (n_b < 1) throw InputError("degree-bin grid values must be at least 1");
  }
  if (seeds_per_eval < 1) throw InputError("seeds_per_eval must be at least 1");
  if (replicates < 1) throw InputError("replicates must be at least 1");
  if (generation.retry_budget < 1) throw InputError("retry budget must be at least 1");
  if (centrality) {
    const bool from_community = centrality_attribute == kCommunityLabel;
    if (from_community && community == CommunityAlgorithm::kNone) {
      throw InputError("linchpin centrality on communities needs a community algorithm");
    }
    if (!from_community && !source.schema().index_of(centrality_attribute)) {
      throw InputError("unknown centrality attribute '" + centrality_attribute + "'");
    }
  }
  if (regression && !source.schema().index_of(regression->attribute)) {
    throw InputError("unknown regression attribute '" + regression->attribute + "'");
  }
}

bool PipelineResult::converged() const {
  if (tune && !tune->converged) return false;
  if (report.source_regression && !report.source_regression->converged) return false;
  return true;
}

std::vector<std::string> augmentation_labels(const PropertyGraph& g) {
  std::vector<std::string> out;
  for (const auto& label : g.schema().labels()) {
    if (label.name == kCommunityLabel || label.name == kCentralityLabel ||
        label.name == kDegreeBinLabel) {
      out.push_back(label.name);
    }
  }
  return out;
}

StructuralAugmentation augment_structure(const PropertyGraph& source, const PipelineSpec& spec) {
  StructuralAugmentation out{source.anonymized(), std::nullopt, {}};
  if (spec.community != CommunityAlgorithm::kNone) {
    stage("community", [&] {
      out.communities = detect_communities(source, spec.community);
      out.graph = append_community_label(out.graph, *out.communities);
      return 0;
    });
    out.log.push_back("community: algorithm=" + std::string(to_string(spec.community)) +
                      " count=" + std::to_string(out.communities->count()));
  }
  if (spec.centrality) {
    stage("centrality", [&] {
      const auto scores = linchpin_centrality(out.graph, spec.centrality_attribute);
      out.graph = append_centrality_bin_label(out.graph, scores, spec.centrality_bins);
      return 0;
    });
    out.log.push_back("centrality: attribute=" + spec.centrality_attribute);
  }
  return out;
}

TuneOptions tune_options(const PropertyGraph& source, const PipelineSpec& spec) {
  TuneOptions options;
  options.grid = spec.degree_grid;
  options.tolerance = spec.tolerance;
  options.mode =
      spec.tune_mode.value_or(spec.tolerance ? TuneMode::kFirstMeeting : TuneMode::kMinimize);
  options.seeds_per_eval = spec.seeds_per_eval;
  options.generation = resolve_generation(source, spec.generation);
  options.jobs = spec.jobs;
  return options;
}

PipelineResult run_pipeline(const PropertyGraph& source, const PipelineSpec& spec) {
  spec.validate(source);
  PipelineResult result;
  const GenerationConfig config = resolve_generation(source, spec.generation);
  result.log.push_back("generation: n_vertices=" + std::to_string(config.n_vertices) +
                       " n_edges=" + std::to_string(config.n_edges) +
                       " seed=" + std::to_string(config.seed));

  StructuralAugmentation structural = augment_structure(source, spec);
  PropertyGraph g = std::move(structural.graph);
  result.source_communities = std::move(structural.communities);
  result.log.insert(result.log.end(), structural.log.begin(), structural.log.end());

  if (!spec.degree_grid.empty()) {
    const bool has_structure = spec.community != CommunityAlgorithm::kNone || spec.centrality;
    if (spec.tolerance && has_structure) {
      result.pre_degree_error = stage("tolerance-check", [&] {
        return evaluate_generation(source, g, config, spec.seeds_per_eval, degree_nrmse);
      });
      result.degree_augmentation_skipped = *result.pre_degree_error <= *spec.tolerance;
      result.log.push_back("tolerance-check: error=" + format_double(*result.pre_degree_error) +
                           (result.degree_augmentation_skipped ? " skip-degree" : ""));
    }
    if (!result.degree_augmentation_skipped) {
      const TuneOptions options = tune_options(source, spec);
      result.tune = stage("degree-tuning", [&] { return tune_degree_bins(g, options); });
      result.selected_bins = result.tune->selected_bins;
      g = append_degree_bin_label(g, result.selected_bins);
      result.log.push_back("degree-tuning: selected=" + std::to_string(result.selected_bins) +
                           " error=" + format_double(result.tune->achieved_error));
    }
  }
  result.augmented_source = g;

  const std::vector<std::string> strip =
      spec.keep_augmentation_labels ? std::vector<std::string>{} : augmentation_labels(g);
  result.generated.resize(spec.replicates);
  for (std::uint32_t i = 0; i < spec.replicates; ++i) result.seeds.push_back(config.seed + i);
  stage("generation", [&] {
    parallel_for(spec.replicates, spec.jobs, [&](std::size_t i) {
      GenerationConfig c = config;
      c.seed = result.seeds[i];
      GeneratedGraph out = generate_like(g, c);
      out.graph = out.graph.without_labels(strip);
      result.generated[i] = std::move(out);
    });
    return 0;
  });
  result.log.push_back("generation: replicates=" + std::to_string(spec.replicates));

  stage("metrics", [&] {
    const auto& primary = result.generated.front().graph;
    result.report = compute_fidelity(source, primary,
                                     spec.report_communities.value_or(spec.community));
    if (spec.regression) {
      result.report.source_regression = fit_homophily(source, *spec.regression);
      try {
        result.report.generated_regression = fit_homophily(primary, *spec.regression);
      } catch (const InputError& e) {
        result.report.generated_regression = RegressionResult{.diagnostic = e.what()};
      }
    }
    return 0;
  });
  result.log.push_back("metrics: nrmse=" + format_double(result.report.nrmse));
  return result;
}

}  // namespace surrograph
